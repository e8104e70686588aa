#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vand/rng.hpp"
#include "vand/spectra.hpp"
#include "vand/types.hpp"

namespace vand {

// One sweep of one experiment.  ids: pair1d (uniformly placed pair clusters,
// d=1), cluster1d (equispaced 5-clusters, d=1), pair2d (randomized pair
// clusters, d=2), triple2d (one triple cluster, d=2).
struct ExperimentConfig {
  std::string id;
  long N = 0;      // frequencies per coordinate; the degree is n = N-1
  long M = 0;      // node count (drives pair1d; derived for the others)
  long L = 0;      // cluster count (drives cluster1d and pair2d)
  long trials = 0;
  double tau_lo = 0.0;
  double tau_hi = 0.0;
  double a = 0.0;  // triple2d displacement parameter, in [0,1)
  std::uint64_t seed = 1;
  std::string out_dir = ".";
};

// Reference parameterization for each experiment id; the caller picks the
// published variants via M (pair1d: 4 or 20), L (cluster1d: 2 or 10; pair2d:
// 2, 20 or 40) and a (triple2d: 0 or 0.1).
ExperimentConfig default_config(const std::string& id);

// Throws std::invalid_argument on unknown id or out-of-range parameters
// (trials < 1, tau range empty or nonpositive, odd M for pair1d, ...).
void validate_config(const ExperimentConfig& cfg);

// Generators take the per-trial stream trial_stream(seed, trial) from
// rng.hpp; trial index -1 is reserved for sweep-constant draws (the pair2d
// anchors).  tau is sampled log-uniformly from the config range inside the
// generator and is recoverable as geometry_summary(...).tau.
NodeSet gen_pair1d(const ExperimentConfig& cfg, SplitMix64& rng);
NodeSet gen_cluster1d(const ExperimentConfig& cfg, SplitMix64& rng);
NodeSet gen_pair2d(const ExperimentConfig& cfg, SplitMix64& rng);
TripleClusterConfig gen_triple2d(const ExperimentConfig& cfg, double a, SplitMix64& rng);

struct TrialRecord {
  long trial = 0;
  double tau = 0.0;
  // Auxiliary per-experiment quantity: widest in-cluster gap (pair1d),
  // scaled cluster separation rho (cluster1d, pair2d), displacement a
  // (triple2d).
  double extra = 0.0;
  double sigma_min = 0.0;
  std::vector<double> bound_values;     // parallel to RunResult::bound_names
  std::vector<char> bound_applicable;   // 0/1, same order
  // Kept out of the CSV: identical (config, seed) must give identical bytes.
  double wall_ms = 0.0;
  std::string status = "ok";
};

struct RunResult {
  std::vector<std::string> bound_names;
  std::vector<TrialRecord> records;
  long lower_violations = 0;  // applicable lower bound above sigma_min*(1+1e-9)
  long upper_violations = 0;  // applicable upper bound below sigma_min*(1-1e-9)
  std::string csv_path;
  std::string plot_path;
};

// Bound column names an experiment with this id emits, in CSV order.
std::vector<std::string> bound_columns(const std::string& id);

// Runs the sweep (trials in parallel, output in trial order), writes
// `<id>.csv` and a gnuplot script `<id>.gp` into cfg.out_dir, returns all
// records plus soundness counters.  Per-trial failures become rows with a
// non-ok status; they never abort the sweep.
RunResult run_experiment(const ExperimentConfig& cfg);

}  // namespace vand
