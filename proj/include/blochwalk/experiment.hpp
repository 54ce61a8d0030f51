#pragma once

#include <string>
#include <vector>

#include "blochwalk/config.hpp"
#include "blochwalk/wigner.hpp"

namespace blochwalk {

inline constexpr const char* kToolVersion = "1.0.0";

/// Observables for one step k of a run.
struct StepRecord {
  int k = 0;
  double normalization_residual = 0.0;
  double sigma_coherent = 0.0;  // from the phi-density moments
  double sigma_sites = 0.0;     // from the site-binned probabilities
  double sigma_ideal = 0.0;
  double total_variation = 0.0;  // site-binned coherent vs ideal
};

struct FileRecord {
  std::string name;
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunManifest {
  RunConfig config;
  std::string version = kToolVersion;
  double wall_clock_seconds = 0.0;
  std::vector<StepRecord> steps;
  std::vector<FileRecord> files;  // everything written except the manifest itself
  std::vector<std::string> warnings;

  /// Pretty-printed JSON with sorted keys.
  std::string to_json() const;
};

/// In-memory results of a run, before anything is written.
struct ExperimentData {
  std::vector<DensityMatrix> walker_states;
  std::vector<WignerGrid> grids;
  std::vector<PhiDistribution> marginals;
  std::vector<SiteDistribution> ideal;
  std::vector<StepRecord> steps;
  std::vector<std::string> warnings;
};

/// Evolves |phi_0> (x) |up> for config.steps periods and evaluates every
/// observable at every step. Errors are rethrown with the step and the
/// observable prepended.
ExperimentData compute_experiment(const RunConfig& config);

/// compute_experiment() followed by the selected CSV/SVG files and
/// manifest.json in config.out_dir. Identical configs give byte-identical
/// data files.
RunManifest run_experiment(const RunConfig& config);

}  // namespace blochwalk
