#include "blochwalk/experiment.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "blochwalk/coherent.hpp"
#include "blochwalk/output.hpp"

namespace blochwalk {
namespace {

template <typename Fn>
auto with_context(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw NumericalError(where + ": " + e.what());
  }
}

std::string step_label(int k) { return "step " + std::to_string(k); }

bool needs_grids(const RunConfig& cfg) {
  return cfg.wants(OutputKind::wigner) || cfg.wants(OutputKind::marginal) ||
         cfg.wants(OutputKind::sites) || cfg.wants(OutputKind::sigma);
}

}  // namespace

ExperimentData compute_experiment(const RunConfig& config) {
  ExperimentData data;
  data.warnings = config.warnings;

  const SpinQuantum j = SpinQuantum::from_spin_count(config.spins);
  const SiteIndexing indexing(config.sites, config.theta0);
  const WalkSchedule schedule = WalkSchedule::site_aligned(indexing, config.steps);

  const auto initial = CoinWalkerState::product(site_state(indexing, j, 0), 1.0, 0.0);
  const auto states = with_context("evolution", [&] { return evolve(initial, config.pulse, schedule); });
  for (std::size_t k = 0; k < states.size(); ++k) {
    data.walker_states.push_back(with_context(step_label(static_cast<int>(k)) + ": reduced density matrix",
                                              [&] { return reduce_walker(states[k]); }));
  }
  data.ideal = ideal_walk(config.sites, config.steps, coin_unitary(config.pulse));

  const GridResolution resolution{config.n_theta, config.n_phi};
  if (needs_grids(config)) {
    const KernelWeights weights = kernel_weights(j);
    data.grids = with_context("wigner grid", [&] {
      return wigner_grids(std::span<const DensityMatrix>(data.walker_states), resolution, weights);
    });
  }

  for (int k = 0; k <= config.steps; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    StepRecord rec;
    rec.k = k;
    rec.sigma_ideal = with_context(step_label(k) + ": ideal sigma", [&] { return ideal_sigma(data.ideal[uk]); });
    if (!data.grids.empty()) {
      const WignerGrid& grid = data.grids[uk];
      for (const auto& w : grid.warnings) data.warnings.push_back(step_label(k) + ": " + w);
      rec.normalization_residual = std::abs(grid.normalization() - 1.0);
      data.marginals.push_back(with_context(step_label(k) + ": marginal", [&] { return marginal_phi(grid, indexing); }));
      const PhiDistribution& marginal = data.marginals.back();
      rec.sigma_coherent = with_context(step_label(k) + ": sigma", [&] { return sigma_from_marginal(marginal); });
      rec.sigma_sites = with_context(step_label(k) + ": site sigma", [&] { return ideal_sigma(marginal.sites); });
      rec.total_variation = total_variation(marginal.sites, data.ideal[uk]);
    }
    data.steps.push_back(rec);
  }
  return data;
}

RunManifest run_experiment(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentData data = compute_experiment(config);

  RunManifest manifest;
  manifest.config = config;
  manifest.steps = data.steps;
  manifest.warnings = data.warnings;

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + config.out_dir.string() + ": " + ec.message());

  std::vector<std::string> written;
  const auto emit = [&](const std::string& name, const std::function<void(const std::filesystem::path&)>& write) {
    write(config.out_dir / name);
    written.push_back(name);
  };

  const SiteIndexing indexing(config.sites, config.theta0);
  for (int k = 0; k <= config.steps; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const std::string suffix = "_k" + std::to_string(k);
    if (config.wants(OutputKind::wigner)) {
      emit("wigner" + suffix + ".csv", [&](const auto& p) { write_wigner_csv(data.grids[uk], p); });
      if (config.svg) {
        emit("wigner" + suffix + ".svg", [&](const auto& p) { render_heatmap_svg(data.grids[uk], indexing, p); });
      }
    }
    if (config.wants(OutputKind::marginal)) {
      emit("marginal" + suffix + ".csv", [&](const auto& p) { write_marginal_csv(data.marginals[uk], p); });
    }
    if (config.wants(OutputKind::sites)) {
      emit("sites" + suffix + ".csv",
           [&](const auto& p) { write_sites_csv(data.marginals[uk].sites, data.ideal[uk], p); });
    }
  }
  if (config.wants(OutputKind::sigma)) {
    std::vector<SigmaRow> rows;
    for (const auto& rec : data.steps) rows.push_back({rec.k, rec.sigma_coherent, rec.sigma_ideal});
    emit("sigma.csv", [&](const auto& p) { write_sigma_csv(rows, p); });
  }
  if (config.wants(OutputKind::ideal)) {
    emit("ideal.csv", [&](const auto& p) { write_ideal_csv(data.ideal, p); });
  }

  for (const auto& name : written) {
    const auto path = config.out_dir / name;
    manifest.files.push_back({name, sha256_file(path), std::filesystem::file_size(path)});
  }
  manifest.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto manifest_path = config.out_dir / "manifest.json";
  std::ofstream out(manifest_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + manifest_path.string());
  out << manifest.to_json();
  if (!out) throw IoError("failed writing " + manifest_path.string());
  return manifest;
}

std::string RunManifest::to_json() const {
  nlohmann::json cfg;
  cfg["sites"] = config.sites;
  cfg["spins"] = config.spins;
  cfg["steps"] = config.steps;
  cfg["coin"] = config.coin;
  cfg["pulse"] = {config.pulse.h[0], config.pulse.h[1], config.pulse.h[2]};
  cfg["theta0"] = config.theta0;
  cfg["grid_theta"] = config.n_theta;
  cfg["grid_phi"] = config.n_phi;
  cfg["out"] = config.out_dir.string();
  cfg["svg"] = config.svg;
  std::vector<std::string> outputs;
  for (const auto kind : config.outputs) outputs.push_back(to_string(kind));
  cfg["outputs"] = outputs;

  nlohmann::json steps_json = nlohmann::json::array();
  nlohmann::json residuals = nlohmann::json::array();
  for (const auto& s : steps) {
    steps_json.push_back({{"k", s.k},
                          {"normalization_residual", s.normalization_residual},
                          {"sigma_coherent", s.sigma_coherent},
                          {"sigma_sites", s.sigma_sites},
                          {"sigma_ideal", s.sigma_ideal},
                          {"total_variation", s.total_variation}});
    residuals.push_back(s.normalization_residual);
  }
  nlohmann::json files_json = nlohmann::json::array();
  for (const auto& f : files) {
    files_json.push_back({{"name", f.name}, {"sha256", f.sha256}, {"bytes", f.bytes}});
  }

  nlohmann::json root;
  root["config"] = cfg;
  root["tool"] = {{"name", "blochwalk"}, {"version", version}};
  root["wall_clock_seconds"] = wall_clock_seconds;
  root["normalization_residuals"] = residuals;
  root["steps"] = steps_json;
  root["files"] = files_json;
  root["warnings"] = warnings;
  return root.dump(2) + "\n";
}

}  // namespace blochwalk
