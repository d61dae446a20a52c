#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vqaa/config_json.hpp"

namespace {

std::uint64_t seed_or_env(std::uint64_t seed, bool seed_set) {
  if (seed_set) return seed;
  if (const char* env = std::getenv("VQAA_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

int cmd_attack(const std::string& config_path, std::uint64_t seed, bool seed_set) {
  vqaa::ExperimentSpec spec = vqaa::load_experiment_file(config_path);
  spec.master_seed = seed_or_env(seed_set ? seed : spec.master_seed, true);
  vqaa::AttackConfig config = vqaa::make_trial_config(spec, 0, nullptr, nullptr);
  vqaa::AttackResult result = vqaa::run_attack(config);
  std::cout << vqaa::attack_result_json(result) << "\n";
  return result.success ? 0 : 1;
}

int cmd_bench(const std::string& config_path, std::uint64_t seed, bool seed_set, int jobs) {
  vqaa::ExperimentSpec spec = vqaa::load_experiment_file(config_path);
  if (seed_set) spec.master_seed = seed;
  if (jobs > 0) spec.jobs = jobs;
  vqaa::ExperimentSummary summary = vqaa::run_experiment(spec);
  std::cout << vqaa::summary_json(summary) << "\n";
  return summary.success_rate == 1.0 ? 0 : 1;
}

int cmd_brute(const std::string& cipher, const std::string& key_hex,
              const std::string& plain_hex, std::uint64_t seed) {
  vqaa::CipherKind kind;
  int key_bits, block_bits;
  if (cipher == "sdes") {
    kind = vqaa::CipherKind::SDes;
    key_bits = 10;
    block_bits = 8;
  } else if (cipher == "saes") {
    kind = vqaa::CipherKind::SAes;
    key_bits = 16;
    block_bits = 16;
  } else if (cipher == "blowfish") {
    kind = vqaa::CipherKind::Blowfish;
    key_bits = 32;
    block_bits = 64;
  } else {
    std::cerr << "unknown cipher: " << cipher << "\n";
    return 2;
  }
  vqaa::BitString key = vqaa::BitString::from_hex(key_hex, key_bits);
  vqaa::BitString plain = vqaa::BitString::from_hex(plain_hex, block_bits);
  vqaa::AttackTarget target = vqaa::make_cipher_target(kind, key, plain);
  vqaa::RngStream rng(vqaa::splitmix64(seed));
  vqaa::BruteForceResult result = vqaa::brute_force(target, rng);
  std::cout << "{\"found\":" << (result.found ? "true" : "false")
            << ",\"key_hex\":\"" << result.key.to_hex() << "\",\"trials\":"
            << result.trials << "}\n";
  return result.found ? 0 : 1;
}

int cmd_equiv(int qubits_lo, int qubits_hi, int draws, std::uint64_t seed) {
  double max_tvd = 0.0;
  for (int kw = qubits_lo; kw <= qubits_hi; ++kw) {
    for (int d = 0; d < draws; ++d) {
      vqaa::RngStream rng = vqaa::RngStream::derive(seed, kw, d);
      vqaa::ToyCipher cipher = vqaa::ToyCipher::random(kw, kw, rng);
      vqaa::AnsatzConfig ansatz{.n_qubits = kw, .n_layers = 2};
      std::vector<double> params(vqaa::param_count(ansatz));
      for (double& p : params) p = rng.angle();
      auto plaintext = static_cast<std::uint32_t>(rng.below(1u << kw));
      max_tvd = std::max(max_tvd,
                         vqaa::equivalence_check(cipher, ansatz, params, plaintext));
    }
  }
  std::cout << "{\"max_tvd\":" << max_tvd << "}\n";
  return max_tvd < 1e-10 ? 0 : 1;
}

int cmd_plot(const std::string& in_path, const std::string& out_path, double baseline) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "cannot open " << in_path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string svg = vqaa::render_plot_svg(buf.str(), baseline);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  out << svg;
  return 0;
}

int cmd_vectors(const std::string& cipher) {
  if (cipher != "blowfish") {
    std::cerr << "no built-in vectors for cipher: " << cipher << "\n";
    return 2;
  }
  int failures = 0;
  for (const vqaa::BlowfishVector& vec : vqaa::blowfish_test_vectors()) {
    vqaa::BitString key = vqaa::BitString::from_hex(vec.key_hex, 64);
    vqaa::BitString plain = vqaa::BitString::from_hex(vec.plain_hex, 64);
    std::string got = vqaa::blowfish_encrypt(key, plain).to_hex();
    bool ok = got == vec.cipher_hex;
    if (!ok) ++failures;
    std::cout << vec.key_hex << " " << vec.plain_hex << " -> " << got
              << (ok ? " ok" : std::string(" FAIL (expect ") + vec.cipher_hex + ")") << "\n";
  }
  std::cout << (failures == 0 ? "all vectors pass" : "vector failures") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational quantum attack toolkit"};
  app.require_subcommand(1);

  std::string config_path, cipher = "sdes", key_hex, plain_hex, in_path, out_path;
  std::uint64_t seed = 0;
  int jobs = 0, qubits_lo = 2, qubits_hi = 3, draws = 10;
  double baseline = 0.0;

  auto* attack = app.add_subcommand("attack", "run one attack from a JSON config");
  attack->add_option("--config", config_path)->required();
  auto* attack_seed = attack->add_option("--seed", seed);

  auto* bench = app.add_subcommand("bench", "run a repeated-trial experiment");
  bench->add_option("--config", config_path)->required();
  auto* bench_seed = bench->add_option("--seed", seed);
  bench->add_option("--jobs", jobs);

  auto* brute = app.add_subcommand("brute", "random-order exhaustive baseline");
  brute->add_option("--target", cipher)->required();
  brute->add_option("--key-hex", key_hex)->required();
  brute->add_option("--plain-hex", plain_hex)->required();
  brute->add_option("--seed", seed);

  auto* equiv = app.add_subcommand("equiv-check",
                                   "original-vs-improved circuit equivalence");
  equiv->add_option("--qubits-lo", qubits_lo);
  equiv->add_option("--qubits-hi", qubits_hi);
  equiv->add_option("--qubits", qubits_lo)->excludes("--qubits-lo");
  equiv->add_option("--draws", draws);
  equiv->add_option("--seed", seed);

  auto* plot = app.add_subcommand("plot", "render a cumulative CSV as SVG");
  plot->add_option("--in", in_path)->required();
  plot->add_option("--out", out_path)->required();
  plot->add_option("--baseline", baseline);

  auto* vectors = app.add_subcommand("vectors", "verify built-in cipher test vectors");
  vectors->add_option("--cipher", cipher)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (attack->parsed()) return cmd_attack(config_path, seed, attack_seed->count() > 0);
    if (bench->parsed()) return cmd_bench(config_path, seed, bench_seed->count() > 0, jobs);
    if (brute->parsed()) return cmd_brute(cipher, key_hex, plain_hex, seed);
    if (equiv->parsed()) {
      if (equiv->count("--qubits") > 0) qubits_hi = qubits_lo;
      return cmd_equiv(qubits_lo, qubits_hi, draws, seed);
    }
    if (plot->parsed()) return cmd_plot(in_path, out_path, baseline);
    if (vectors->parsed()) return cmd_vectors(cipher);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
