#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vqaa/attack.hpp"

namespace vqaa {

enum class TargetFamily { SDes, SAes, BlowfishShard, Hash };

struct ExperimentSpec {
  TargetFamily family = TargetFamily::SDes;
  int trials = 100;
  AnsatzConfig ansatz;
  OptimizerConfig optimizer;
  int states_per_qubit = 1;  // 1 = orthogonal, 4 or 16 = non-orthogonal
  std::uint64_t master_seed = 0;
  std::uint64_t max_iterations = 512;
  bool baseline = false;
  // BlowfishShard: total key width and the number of leading bits fixed
  // to the secret's value for the desk-scale shard.
  int blowfish_key_bits = 32;
  int prefix_fixed_bits = 20;
  // Hash: document width, mutable tail width and digest width.
  int hash_document_bits = 64;
  int hash_segment_bits = 12;
  int hash_digest_bits = 8;
  std::string out_dir;
  int jobs = 0;  // 0 = library default
};

struct TrialRecord {
  int trial = 0;
  BitString secret_key;
  BitString plaintext;
  std::uint64_t iterations = 0;
  std::uint64_t measurements = 0;
  bool success = false;
  double wall_ms = 0.0;
  std::uint64_t baseline_trials = 0;
};

struct ExperimentSummary {
  int trials = 0;
  double success_rate = 0.0;
  double mean_iterations = 0.0;
  double mean_measurements = 0.0;
  double baseline_mean_trials = 0.0;
  double total_wall_seconds = 0.0;
  int param_count = 0;
};

ExperimentSummary run_experiment(const ExperimentSpec& spec,
                                 std::vector<TrialRecord>* out_records = nullptr);

// CSV columns: trial,secret_key_hex,plaintext_hex,iterations,measurements,success,wall_ms
void write_trials_csv(const std::vector<TrialRecord>& records, std::ostream& out);
// CSV columns: trial,cum_avg_iterations,cum_avg_measurements
void write_cumulative_csv(const std::vector<TrialRecord>& records, std::ostream& out);

// Renders the cumulative CSV as an SVG line chart with one polyline per
// series plus an optional horizontal baseline. Byte-deterministic.
std::string render_plot_svg(const std::string& cumulative_csv, double baseline = 0.0);

// Builds the per-trial attack configuration; exposed for tests.
AttackConfig make_trial_config(const ExperimentSpec& spec, int trial,
                               BitString* secret_key, BitString* plaintext);

}  // namespace vqaa
