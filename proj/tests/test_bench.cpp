#include <doctest.h>

#include <stdexcept>

#include <sstream>
#include <string>
#include <vector>

#include "vqaa/config_json.hpp"
#include "vqaa/experiment.hpp"

using namespace vqaa;

namespace {

ExperimentSpec small_sdes_spec() {
  ExperimentSpec spec;
  spec.family = TargetFamily::SDes;
  spec.trials = 8;
  spec.ansatz.n_qubits = 10;
  spec.ansatz.n_layers = 3;
  spec.optimizer.method = OptMethod::Hyperspherical;
  spec.states_per_qubit = 1;
  spec.master_seed = 0xFEEDu;
  spec.max_iterations = 2048;
  spec.optimizer.max_iterations = 2048;
  return spec;
}

}  // namespace

TEST_CASE("make_trial_config is deterministic and varies across trials") {
  ExperimentSpec spec = small_sdes_spec();
  BitString k0a, p0a, k0b, p0b, k1, p1;
  AttackConfig a = make_trial_config(spec, 0, &k0a, &p0a);
  AttackConfig b = make_trial_config(spec, 0, &k0b, &p0b);
  CHECK(k0a == k0b);
  CHECK(p0a == p0b);
  CHECK(a.master_seed == b.master_seed);
  make_trial_config(spec, 1, &k1, &p1);
  CHECK((k0a != k1 || p0a != p1));
  CHECK(k0a.width() == 10);
  CHECK(p0a.width() == 8);
}

TEST_CASE("experiment summary aggregates the trial records") {
  ExperimentSpec spec = small_sdes_spec();
  std::vector<TrialRecord> records;
  ExperimentSummary summary = run_experiment(spec, &records);
  REQUIRE(static_cast<int>(records.size()) == spec.trials);
  double iter_sum = 0.0, meas_sum = 0.0;
  int wins = 0;
  for (const TrialRecord& rec : records) {
    iter_sum += static_cast<double>(rec.iterations);
    meas_sum += static_cast<double>(rec.measurements);
    wins += rec.success ? 1 : 0;
  }
  CHECK(summary.trials == spec.trials);
  CHECK(summary.param_count == param_count(spec.ansatz));
  CHECK(summary.mean_iterations == doctest::Approx(iter_sum / spec.trials));
  CHECK(summary.mean_measurements == doctest::Approx(meas_sum / spec.trials));
  CHECK(summary.success_rate == doctest::Approx(static_cast<double>(wins) / spec.trials));
}

TEST_CASE("experiments reproduce exactly for a fixed seed, modulo timing") {
  ExperimentSpec spec = small_sdes_spec();
  spec.trials = 6;
  std::vector<TrialRecord> a, b;
  run_experiment(spec, &a);
  run_experiment(spec, &b);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].trial == b[i].trial);
    CHECK(a[i].secret_key == b[i].secret_key);
    CHECK(a[i].plaintext == b[i].plaintext);
    CHECK(a[i].iterations == b[i].iterations);
    CHECK(a[i].measurements == b[i].measurements);
    CHECK(a[i].success == b[i].success);
  }
}

TEST_CASE("gradient-descent experiments satisfy the accounting identity") {
  ExperimentSpec spec = small_sdes_spec();
  spec.trials = 4;
  spec.optimizer.method = OptMethod::GradientDescent;
  std::vector<TrialRecord> records;
  run_experiment(spec, &records);
  std::uint64_t n_params = static_cast<std::uint64_t>(param_count(spec.ansatz));
  for (const TrialRecord& rec : records)
    CHECK(rec.measurements == rec.iterations * n_params);
}

TEST_CASE("baseline brute-force column is filled when requested") {
  ExperimentSpec spec = small_sdes_spec();
  spec.trials = 4;
  spec.baseline = true;
  std::vector<TrialRecord> records;
  ExperimentSummary summary = run_experiment(spec, &records);
  for (const TrialRecord& rec : records) {
    CHECK(rec.baseline_trials >= 1);
    CHECK(rec.baseline_trials <= 1024);
  }
  CHECK(summary.baseline_mean_trials > 0.0);
}

TEST_CASE("trials CSV layout") {
  std::vector<TrialRecord> records(2);
  records[0].trial = 0;
  records[0].secret_key = BitString::from_hex("2AB", 10);
  records[0].plaintext = BitString::from_hex("5C", 8);
  records[0].iterations = 17;
  records[0].measurements = 357;
  records[0].success = true;
  records[0].wall_ms = 12.6;
  records[1].trial = 1;
  records[1].secret_key = BitString::from_hex("001", 10);
  records[1].plaintext = BitString::from_hex("FF", 8);
  records[1].wall_ms = 0.2;
  std::ostringstream out;
  write_trials_csv(records, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "trial,secret_key_hex,plaintext_hex,iterations,measurements,success,wall_ms");
  std::getline(in, line);
  CHECK(line == "0,2AB,5C,17,357,1,13");
  std::getline(in, line);
  CHECK(line == "1,001,FF,0,0,0,0");
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("cumulative CSV is a running average with fixed formatting") {
  std::vector<TrialRecord> records(3);
  records[0].iterations = 10;
  records[0].measurements = 100;
  records[1].iterations = 20;
  records[1].measurements = 300;
  records[2].iterations = 3;
  records[2].measurements = 5;
  std::ostringstream out;
  write_cumulative_csv(records, out);
  CHECK(out.str() ==
        "trial,cum_avg_iterations,cum_avg_measurements\n"
        "0,10.000000,100.000000\n"
        "1,15.000000,200.000000\n"
        "2,11.000000,135.000000\n");
}

TEST_CASE("cumulative CSV bytes are identical across repeated runs") {
  ExperimentSpec spec = small_sdes_spec();
  spec.trials = 6;
  std::string csv[2];
  for (int rep = 0; rep < 2; ++rep) {
    std::vector<TrialRecord> records;
    run_experiment(spec, &records);
    std::ostringstream out;
    write_cumulative_csv(records, out);
    csv[rep] = out.str();
  }
  CHECK(csv[0] == csv[1]);
}

TEST_CASE("SVG rendering is deterministic and well-formed") {
  std::string csv =
      "trial,cum_avg_iterations,cum_avg_measurements\n"
      "0,10.000000,100.000000\n"
      "1,15.000000,200.000000\n"
      "2,11.000000,135.000000\n";
  std::string svg = render_plot_svg(csv, 512.0);
  CHECK(svg == render_plot_svg(csv, 512.0));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // baseline line
  CHECK(svg.find("</svg>") != std::string::npos);
  // No baseline requested: no dashed line.
  CHECK(render_plot_svg(csv, 0.0).find("stroke-dasharray") == std::string::npos);
  CHECK_THROWS_AS(render_plot_svg("", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(render_plot_svg("no header line", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(render_plot_svg("a,b,c\n1,garbage\n", 0.0), std::invalid_argument);
}

TEST_CASE("JSON experiment config round-trips into a spec") {
  std::string text = R"({
    "target": {"family": "hash", "document_bits": 48, "segment_bits": 12, "digest_bits": 8},
    "ansatz": {"n_qubits": 12, "n_layers": 2, "cnot_seed": 7, "extra_cnots_per_layer": 3},
    "optimizer": {"method": "plane-rotation", "learning_rate": 0.1, "fd_step": 0.2, "rotation_angle": 0.4},
    "encoding": {"states_per_qubit": 4},
    "trials": 25,
    "seed": 99,
    "max_iterations": 333,
    "baseline": true,
    "output": "/tmp/x",
    "jobs": 2
  })";
  ExperimentSpec spec = parse_experiment_json(text);
  CHECK(spec.family == TargetFamily::Hash);
  CHECK(spec.hash_document_bits == 48);
  CHECK(spec.hash_segment_bits == 12);
  CHECK(spec.hash_digest_bits == 8);
  CHECK(spec.ansatz.n_qubits == 12);
  CHECK(spec.ansatz.n_layers == 2);
  CHECK(spec.ansatz.cnot_seed == 7);
  CHECK(spec.ansatz.extra_cnots_per_layer == 3);
  CHECK(spec.optimizer.method == OptMethod::PlaneRotation);
  CHECK(spec.optimizer.learning_rate == doctest::Approx(0.1));
  CHECK(spec.optimizer.fd_step == doctest::Approx(0.2));
  CHECK(spec.optimizer.rotation_angle == doctest::Approx(0.4));
  CHECK(spec.states_per_qubit == 4);
  CHECK(spec.trials == 25);
  CHECK(spec.master_seed == 99);
  CHECK(spec.max_iterations == 333);
  CHECK(spec.optimizer.max_iterations == 333);
  CHECK(spec.baseline);
  CHECK(spec.out_dir == "/tmp/x");
  CHECK(spec.jobs == 2);

  CHECK_THROWS(parse_experiment_json(R"({"target": {"family": "des"},
    "ansatz": {"n_qubits": 4}})"));
  CHECK_THROWS(parse_experiment_json("not json"));
}

TEST_CASE("attack result and summary JSON include the headline fields") {
  AttackResult r;
  r.success = true;
  r.recovered_key = BitString::from_hex("2AB", 10);
  r.iterations = 5;
  r.measurements = 105;
  std::string j = attack_result_json(r);
  CHECK(j.find("\"success\":true") != std::string::npos);
  CHECK(j.find("\"recovered_key_hex\":\"2AB\"") != std::string::npos);
  CHECK(j.find("\"iterations\":5") != std::string::npos);

  ExperimentSummary s;
  s.trials = 3;
  s.success_rate = 1.0;
  s.mean_iterations = 4.5;
  s.mean_measurements = 90.0;
  s.param_count = 60;
  std::string sj = summary_json(s);
  CHECK(sj.find("\"trials\":3") != std::string::npos);
  CHECK(sj.find("\"param_count\":60") != std::string::npos);
}
