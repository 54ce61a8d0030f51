#include "blochwalk/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

namespace blochwalk {
namespace {

const std::set<std::string> kKnownKeys{"sites",      "spins",     "steps", "coin", "theta0",
                                       "grid-theta", "grid-phi",  "outputs", "out", "svg"};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) {
    part = trim(part);
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

int parse_int(const std::string& key, const std::string& token) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("malformed integer for " + key + ": '" + token + "'");
  }
  return value;
}

double parse_double(const std::string& key, const std::string& token) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError("malformed number for " + key + ": '" + token + "'");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& token) {
  if (token == "true" || token == "1" || token == "yes" || token == "on") return true;
  if (token == "false" || token == "0" || token == "no" || token == "off") return false;
  throw ConfigError("malformed boolean for " + key + ": '" + token + "'");
}

OutputKind parse_output(const std::string& token) {
  if (token == "wigner") return OutputKind::wigner;
  if (token == "marginal") return OutputKind::marginal;
  if (token == "sites") return OutputKind::sites;
  if (token == "sigma") return OutputKind::sigma;
  if (token == "ideal") return OutputKind::ideal;
  throw ConfigError("unknown output '" + token + "' (expected wigner, marginal, sites, sigma, ideal)");
}

}  // namespace

std::string to_string(OutputKind kind) {
  switch (kind) {
    case OutputKind::wigner: return "wigner";
    case OutputKind::marginal: return "marginal";
    case OutputKind::sites: return "sites";
    case OutputKind::sigma: return "sigma";
    case OutputKind::ideal: return "ideal";
  }
  return "unknown";
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::map<std::string, std::string> settings;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": expected 'key = value', got '" +
                        line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (kKnownKeys.count(key) == 0) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    settings[key] = value;
  }
  return settings;
}

RunConfig config_from_settings(const std::map<std::string, std::string>& settings) {
  for (const auto& [key, value] : settings) {
    if (kKnownKeys.count(key) == 0) throw ConfigError("unknown key '" + key + "'");
  }
  const auto get = [&](const std::string& key) -> const std::string* {
    const auto it = settings.find(key);
    return it == settings.end() ? nullptr : &it->second;
  };

  RunConfig cfg;
  if (const auto* v = get("sites")) cfg.sites = parse_int("sites", *v);
  if (const auto* v = get("spins")) cfg.spins = parse_int("spins", *v);
  if (const auto* v = get("steps")) cfg.steps = parse_int("steps", *v);
  if (const auto* v = get("theta0")) cfg.theta0 = parse_double("theta0", *v);
  if (const auto* v = get("grid-theta")) cfg.n_theta = parse_int("grid-theta", *v);
  if (const auto* v = get("grid-phi")) cfg.n_phi = parse_int("grid-phi", *v);
  if (const auto* v = get("out")) {
    if (v->empty()) throw ConfigError("empty value for out");
    cfg.out_dir = *v;
  }
  if (const auto* v = get("svg")) cfg.svg = parse_bool("svg", *v);
  if (const auto* v = get("outputs")) {
    cfg.outputs.clear();
    for (const auto& token : split(*v, ',')) cfg.outputs.insert(parse_output(token));
    if (cfg.outputs.empty()) throw ConfigError("outputs: empty selection");
  }
  if (const auto* v = get("coin")) {
    std::vector<std::string> tokens;
    std::istringstream in(*v);
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.size() == 1 && tokens[0] == "hadamard") {
      cfg.coin = "hadamard";
      cfg.pulse = CoinPulse::hadamard();
    } else if (tokens.size() == 4 && tokens[0] == "custom") {
      cfg.coin = "custom";
      for (std::size_t i = 0; i < 3; ++i) cfg.pulse.h[i] = parse_double("coin", tokens[i + 1]);
    } else {
      throw ConfigError("coin: expected 'hadamard' or 'custom hx hy hz', got '" + *v + "'");
    }
  }

  if (cfg.sites < 2) throw ConfigError("sites must be >= 2, got " + std::to_string(cfg.sites));
  if (cfg.spins < 1) throw ConfigError("spins must be >= 1, got " + std::to_string(cfg.spins));
  if (cfg.steps < 0) throw ConfigError("steps must be >= 0, got " + std::to_string(cfg.steps));
  if (!(cfg.theta0 >= 0.0 && cfg.theta0 <= kPi)) {
    throw ConfigError("theta0 must lie in [0, pi], got " + std::to_string(cfg.theta0));
  }
  if (get("grid-theta") == nullptr) cfg.n_theta = cfg.spins + 2;
  if (get("grid-phi") == nullptr) cfg.n_phi = 8 * cfg.sites;
  if (cfg.n_theta < 1) throw ConfigError("grid-theta must be positive");
  if (cfg.n_phi < 1) throw ConfigError("grid-phi must be positive");
  if (cfg.n_phi % cfg.sites != 0) {
    throw ConfigError("grid-phi (" + std::to_string(cfg.n_phi) + ") must be a multiple of sites (" +
                      std::to_string(cfg.sites) + ")");
  }
  if (cfg.n_theta < cfg.spins + 2) {
    cfg.warnings.push_back("grid-theta below 2J+2 = " + std::to_string(cfg.spins + 2) +
                           "; theta quadrature is no longer exact");
  }
  if (2 * cfg.steps >= cfg.sites) {
    cfg.warnings.push_back("steps >= L/2: the walk wraps around the circle and the unwrapped "
                           "standard deviation is no longer meaningful (use a Holevo-type spread)");
  }
  return cfg;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  std::vector<std::string> argv = args;
  if (!argv.empty() && argv.front() == "run") argv.erase(argv.begin());

  CLI::App app{"blochwalk"};
  std::map<std::string, std::string> cli;
  std::string config_file;
  std::vector<std::string> coin_tokens;
  bool svg = true;

  const auto add_value = [&](const std::string& key) {
    return app.add_option_function<std::string>(
        "--" + key, [&cli, key](const std::string& v) { cli[key] = v; });
  };
  for (const char* key : {"sites", "spins", "steps", "theta0", "grid-theta", "grid-phi", "outputs", "out"}) {
    add_value(key);
  }
  app.add_option("--coin", coin_tokens)->expected(1, 4);
  app.add_option("--config", config_file);
  auto* svg_flag = app.add_flag("--svg,!--no-svg", svg);

  // CLI11 parses a reversed argument vector.
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  if (!coin_tokens.empty()) {
    std::string joined;
    for (const auto& t : coin_tokens) joined += (joined.empty() ? "" : " ") + t;
    cli["coin"] = joined;
  }
  if (svg_flag->count() > 0) cli["svg"] = svg ? "true" : "false";

  std::map<std::string, std::string> settings;
  if (!config_file.empty()) settings = read_config_file(config_file);
  for (const auto& [key, value] : cli) settings[key] = value;
  return config_from_settings(settings);
}

}  // namespace blochwalk
