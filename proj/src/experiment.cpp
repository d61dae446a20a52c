#include "vqaa/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vqaa {

namespace {

EncodingMode make_encoding(int states_per_qubit) {
  if (states_per_qubit == 1) return EncodingMode::Orthogonal();
  return EncodingMode::NonOrthogonal(sphere_anchors(states_per_qubit));
}

}  // namespace

AttackConfig make_trial_config(const ExperimentSpec& spec, int trial,
                               BitString* secret_key, BitString* plaintext) {
  RngStream pair_rng = RngStream::derive(spec.master_seed, 0x7261697Cull, trial);
  AttackConfig config;
  config.ansatz = spec.ansatz;
  config.optimizer = spec.optimizer;
  config.encoding = make_encoding(spec.states_per_qubit);
  config.master_seed = splitmix64(spec.master_seed ^ splitmix64(trial + 1));
  config.max_iterations = spec.max_iterations;

  switch (spec.family) {
    case TargetFamily::SDes: {
      BitString key = pair_rng.bitstring(10);
      BitString plain = pair_rng.bitstring(8);
      config.target = make_cipher_target(CipherKind::SDes, key, plain);
      if (secret_key) *secret_key = key;
      if (plaintext) *plaintext = plain;
      break;
    }
    case TargetFamily::SAes: {
      BitString key = pair_rng.bitstring(16);
      BitString plain = pair_rng.bitstring(16);
      config.target = make_cipher_target(CipherKind::SAes, key, plain);
      if (secret_key) *secret_key = key;
      if (plaintext) *plaintext = plain;
      break;
    }
    case TargetFamily::BlowfishShard: {
      BitString key = pair_rng.bitstring(spec.blowfish_key_bits);
      BitString plain = pair_rng.bitstring(64);
      AttackTarget full = make_cipher_target(CipherKind::Blowfish, key, plain);
      config.target = make_prefixed_target(full, key.slice(0, spec.prefix_fixed_bits));
      if (secret_key) *secret_key = key;
      if (plaintext) *plaintext = plain;
      break;
    }
    case TargetFamily::Hash: {
      BitString document = pair_rng.bitstring(spec.hash_document_bits);
      config.target = make_hash_collision_target(document, spec.hash_segment_bits,
                                                 spec.hash_digest_bits);
      if (secret_key) *secret_key = document.slice(
          spec.hash_document_bits - spec.hash_segment_bits, spec.hash_segment_bits);
      if (plaintext) *plaintext = document;
      break;
    }
  }
  return config;
}

ExperimentSummary run_experiment(const ExperimentSpec& spec,
                                 std::vector<TrialRecord>* out_records) {
  if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
#ifdef _OPENMP
  if (spec.jobs > 0) omp_set_num_threads(spec.jobs);
#endif
  std::vector<TrialRecord> records(spec.trials);

#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < spec.trials; ++t) {
    TrialRecord rec;
    rec.trial = t;
    AttackConfig config = make_trial_config(spec, t, &rec.secret_key, &rec.plaintext);
    AttackResult res = run_attack(config);
    rec.iterations = res.iterations;
    rec.measurements = res.measurements;
    rec.success = res.success;
    rec.wall_ms = res.wall_seconds * 1e3;
    if (spec.baseline) {
      RngStream brng = RngStream::derive(spec.master_seed, 0x62727574ull, t);
      rec.baseline_trials = brute_force(config.target, brng).trials;
    }
    records[t] = std::move(rec);
  }

  ExperimentSummary summary;
  summary.trials = spec.trials;
  summary.param_count = param_count(spec.ansatz);
  double iter_sum = 0.0, meas_sum = 0.0, base_sum = 0.0, wall_sum = 0.0;
  int successes = 0;
  for (const TrialRecord& rec : records) {
    iter_sum += static_cast<double>(rec.iterations);
    meas_sum += static_cast<double>(rec.measurements);
    base_sum += static_cast<double>(rec.baseline_trials);
    wall_sum += rec.wall_ms;
    successes += rec.success ? 1 : 0;
  }
  summary.success_rate = static_cast<double>(successes) / spec.trials;
  summary.mean_iterations = iter_sum / spec.trials;
  summary.mean_measurements = meas_sum / spec.trials;
  summary.baseline_mean_trials = spec.baseline ? base_sum / spec.trials : 0.0;
  summary.total_wall_seconds = wall_sum / 1e3;

  if (!spec.out_dir.empty()) {
    std::ofstream trials_out(spec.out_dir + "/trials.csv");
    std::ofstream cum_out(spec.out_dir + "/cumulative.csv");
    if (!trials_out || !cum_out)
      throw std::runtime_error("cannot write to output directory " + spec.out_dir);
    write_trials_csv(records, trials_out);
    write_cumulative_csv(records, cum_out);
  }
  if (out_records) *out_records = std::move(records);
  return summary;
}

void write_trials_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
  out << "trial,secret_key_hex,plaintext_hex,iterations,measurements,success,wall_ms\n";
  for (const TrialRecord& rec : records) {
    out << rec.trial << ',' << rec.secret_key.to_hex() << ',' << rec.plaintext.to_hex()
        << ',' << rec.iterations << ',' << rec.measurements << ','
        << (rec.success ? 1 : 0) << ',' << std::llround(rec.wall_ms) << '\n';
  }
}

void write_cumulative_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
  out << "trial,cum_avg_iterations,cum_avg_measurements\n";
  double iter_sum = 0.0, meas_sum = 0.0;
  char buf[64];
  for (size_t i = 0; i < records.size(); ++i) {
    iter_sum += static_cast<double>(records[i].iterations);
    meas_sum += static_cast<double>(records[i].measurements);
    double n = static_cast<double>(i + 1);
    std::snprintf(buf, sizeof(buf), "%zu,%.6f,%.6f", i, iter_sum / n, meas_sum / n);
    out << buf << '\n';
  }
}

std::string render_plot_svg(const std::string& cumulative_csv, double baseline) {
  std::istringstream in(cumulative_csv);
  std::string line;
  if (!std::getline(in, line) || line.find(',') == std::string::npos)
    throw std::invalid_argument("malformed CSV: missing header");
  std::vector<double> xs, iters, meas;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double t, a, m;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &a, &m) != 3)
      throw std::invalid_argument("malformed CSV row: " + line);
    xs.push_back(t);
    iters.push_back(a);
    meas.push_back(m);
  }
  if (xs.empty()) throw std::invalid_argument("CSV has no data rows");

  constexpr double kW = 640.0, kH = 400.0, kPad = 50.0;
  double xmax = xs.back() > 0 ? xs.back() : 1.0;
  double ymax = baseline;
  for (double v : iters) ymax = std::max(ymax, v);
  if (ymax <= 0) ymax = 1.0;
  auto px = [&](double x) { return kPad + (kW - 2 * kPad) * x / xmax; };
  auto py = [&](double y) { return kH - kPad - (kH - 2 * kPad) * y / ymax; };

  char buf[160];
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n",
                kW, kH);
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                kPad, kH - kPad, kW - kPad, kH - kPad);
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                kPad, kPad, kPad, kH - kPad);
  svg += buf;
  svg += "<text x=\"280\" y=\"392\" font-size=\"14\">trial index</text>\n";
  svg += "<text x=\"12\" y=\"200\" font-size=\"14\" transform=\"rotate(-90 12 200)\">"
         "average iterations</text>\n";
  svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(xs[i]), py(iters[i]));
    svg += buf;
  }
  if (!xs.empty()) svg.pop_back();
  svg += "\"/>\n";
  if (baseline > 0.0) {
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.2f\" x2=\"%.1f\" y2=\"%.2f\" "
                  "stroke=\"#d62728\" stroke-dasharray=\"6,4\"/>\n",
                  kPad, py(baseline), kW - kPad, py(baseline));
    svg += buf;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace vqaa
