#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "blochwalk/walk.hpp"

namespace blochwalk {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputKind { wigner, marginal, sites, sigma, ideal };

std::string to_string(OutputKind kind);

struct RunConfig {
  int sites = 6;
  int spins = 50;
  int steps = 2;
  std::string coin = "hadamard";  // "hadamard" or "custom"
  CoinPulse pulse = CoinPulse::hadamard();
  double theta0 = kPi / 2;
  int n_theta = 0;  // resolved to 2J + 2 when not given
  int n_phi = 0;    // resolved to 8L when not given
  std::set<OutputKind> outputs{OutputKind::wigner, OutputKind::marginal, OutputKind::sites,
                               OutputKind::sigma, OutputKind::ideal};
  std::filesystem::path out_dir = "blochwalk-out";
  bool svg = true;
  std::vector<std::string> warnings;

  bool wants(OutputKind kind) const { return outputs.count(kind) != 0; }
};

/// Reads flat "key = value" lines; '#' starts a comment. Keys are the long
/// flag names without dashes. Throws ConfigError on malformed lines.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Flags override config-file keys, which override defaults. A leading "run"
/// token is accepted and ignored. Throws ConfigError naming the offending
/// token for unknown keys, malformed numbers and out-of-range values.
RunConfig parse_config(const std::vector<std::string>& args);

/// Converts a merged key/value map into a validated RunConfig.
RunConfig config_from_settings(const std::map<std::string, std::string>& settings);

}  // namespace blochwalk
