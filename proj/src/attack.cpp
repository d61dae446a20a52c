#include "vqaa/attack.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vqaa {

namespace {

// Steps whose parameters move less than this are treated as stalled
// (zero gradient on a piecewise-constant cost) and the register is
// re-initialized from the trial stream.
constexpr double kStallTolerance = 1e-9;

// Iterations without a strict improvement of the sampled cost before the
// register is re-initialized.  The decode map is piecewise constant, so a
// wandering parameter walk can cycle through a small set of keys without
// ever stalling exactly; the patience restart restores uniform coverage.
constexpr int kRestartPatience = 24;

bool stalled(std::span<const double> a, std::span<const double> b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kStallTolerance) return false;
  return true;
}

}  // namespace

AttackResult run_attack(const AttackConfig& config) {
  if (config.encoding.key_bits(config.ansatz.n_qubits) != config.target.key_width)
    throw std::invalid_argument("encoding key capacity does not match target key width");

  auto t0 = std::chrono::steady_clock::now();
  AttackResult result;
  MeasurementCounter counter;
  RngStream rng = RngStream::derive(config.master_seed, 1);

  const auto gates = build_template(config.ansatz);
  const int n_params = param_count(config.ansatz);
  const double out_width = config.target.known_output.width();

  std::vector<double> params(n_params);
  for (double& p : params) p = rng.angle();

  bool found = false;
  BitString found_key;
  auto sample_cost = [&](std::span<const double> p) -> int {
    Statevector state = new_state(config.ansatz.n_qubits);
    apply_template(state, gates, p);
    BitString key = decode_key(state, config.encoding, rng);
    int c = key_cost(config.target, key);
    if (c == 0 && !found) {
      found = true;
      found_key = key;
    }
    return c;
  };
  CostFn lifted_cost = [&](std::span<const double> p) {
    return sample_cost(p) / out_width;
  };

  int best_cost = std::numeric_limits<int>::max();
  int since_improvement = 0;
  for (std::uint64_t iter = 1; iter <= config.max_iterations && !found; ++iter) {
    int cost = sample_cost(params);
    result.cost_trace.emplace_back(iter, cost);
    if (found) break;

    std::vector<double> next;
    switch (config.optimizer.method) {
      case OptMethod::GradientDescent:
        next = gradient_descent_step(params, cost / out_width, lifted_cost,
                                     config.optimizer, counter);
        break;
      case OptMethod::Hyperspherical:
        next = hyperspherical_step(params, cost / out_width, lifted_cost,
                                   config.optimizer, counter);
        break;
      case OptMethod::PlaneRotation:
        next = plane_rotation_step(params, cost / out_width, lifted_cost,
                                   config.optimizer, counter, rng);
        break;
    }
    ++counter.iterations;
    if (cost < best_cost) {
      best_cost = cost;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (!found && (stalled(params, next) || since_improvement >= kRestartPatience)) {
      // Flat cost cell or a plateaued walk; restart from a fresh random point.
      for (double& p : params) p = rng.angle();
      best_cost = std::numeric_limits<int>::max();
      since_improvement = 0;
    } else {
      params = std::move(next);
    }
  }

  result.iterations = counter.iterations;
  result.measurements = counter.total_measurements;
  if (found) {
    // Verify by full re-evaluation before claiming success.
    if (key_cost(config.target, found_key) == 0 &&
        config.target.evaluate(found_key) == config.target.known_output) {
      result.success = true;
      result.recovered_key = found_key;
    }
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

HybridResult run_hybrid_attack(const AttackConfig& config, int prefix_width) {
  int full_width = config.target.key_width;
  if (prefix_width <= 0 || prefix_width >= full_width)
    throw std::invalid_argument("prefix width out of range");
  if (prefix_width > 16)
    throw std::invalid_argument("prefix too wide for the shard budget");
  int suffix_width = full_width - prefix_width;
  if (config.encoding.key_bits(config.ansatz.n_qubits) != suffix_width)
    throw std::invalid_argument("shard register does not cover the key suffix");

  HybridResult result;
  result.shard_count = 1ull << prefix_width;
  result.shards.resize(result.shard_count);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(result.shard_count); ++v) {
    BitString prefix = BitString::from_uint(static_cast<std::uint64_t>(v), prefix_width);
    AttackConfig shard_config = config;
    shard_config.target = make_prefixed_target(config.target, prefix);
    shard_config.master_seed = splitmix64(config.master_seed ^ static_cast<std::uint64_t>(v));
    result.shards[v] = run_attack(shard_config);
  }

  double total_meas = 0.0, total_iter = 0.0;
  for (std::uint64_t v = 0; v < result.shard_count; ++v) {
    const AttackResult& shard = result.shards[v];
    total_meas += static_cast<double>(shard.measurements);
    total_iter += static_cast<double>(shard.iterations);
    if (shard.success && !result.success) {
      BitString full = BitString::from_uint(v, prefix_width).concat(*shard.recovered_key);
      if (key_cost(config.target, full) == 0) {
        result.success = true;
        result.recovered_key = full;
      }
    }
  }
  result.mean_shard_measurements = total_meas / static_cast<double>(result.shard_count);
  result.mean_shard_iterations = total_iter / static_cast<double>(result.shard_count);
  result.aggregate_measurements =
      result.mean_shard_measurements * static_cast<double>(result.shard_count);
  return result;
}

BruteForceResult brute_force(const AttackTarget& target, RngStream& rng,
                             std::uint64_t max_trials) {
  if (target.key_width > 32)
    throw std::invalid_argument("exhaustive mode requires key width <= 32");
  std::uint64_t space = 1ull << target.key_width;
  if (max_trials == 0 || max_trials > space) max_trials = space;
  // Seeded affine walk: odd multiplier mod a power of two is a bijection,
  // so every key is visited exactly once.
  std::uint64_t mult = (rng.next() | 1) & (space - 1);
  std::uint64_t offset = rng.next() & (space - 1);
  BruteForceResult result;
  for (std::uint64_t i = 0; i < max_trials; ++i) {
    std::uint64_t k = (mult * i + offset) & (space - 1);
    BitString key = BitString::from_uint(k, target.key_width);
    ++result.trials;
    if (key_cost(target, key) == 0) {
      result.key = key;
      result.found = true;
      return result;
    }
  }
  return result;
}

ToyCipher ToyCipher::random(int key_bits, int block_bits, RngStream& rng) {
  if (key_bits < 1 || key_bits > 3 || block_bits < 1 || block_bits > 3)
    throw std::invalid_argument("toy cipher registers are limited to 3 bits");
  ToyCipher cipher;
  cipher.key_bits = key_bits;
  cipher.block_bits = block_bits;
  std::uint32_t blocks = 1u << block_bits;
  cipher.perm.assign(1u << key_bits, {});
  for (auto& row : cipher.perm) {
    row.resize(blocks);
    std::iota(row.begin(), row.end(), 0u);
    for (std::uint32_t i = blocks - 1; i > 0; --i)
      std::swap(row[i], row[rng.below(i + 1)]);
  }
  return cipher;
}

bool ToyCipher::bijective() const {
  for (const auto& row : perm) {
    std::vector<bool> seen(row.size(), false);
    for (std::uint32_t v : row) {
      if (v >= row.size() || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

double equivalence_check(const ToyCipher& cipher, const AnsatzConfig& config,
                         std::span<const double> params, std::uint32_t plaintext) {
  if (!cipher.bijective()) throw std::invalid_argument("toy cipher must be bijective");
  if (config.n_qubits != cipher.key_bits)
    throw std::invalid_argument("ansatz width must match the toy key register");
  int kw = cipher.key_bits, bw = cipher.block_bits;
  std::uint32_t keys = 1u << kw, blocks = 1u << bw;
  if (plaintext >= blocks) throw std::invalid_argument("plaintext out of range");

  // Joint circuit: key register qubits [0, kw), message register holds |p>.
  Statevector joint = new_state(kw + bw);
  joint.amp[0] = 0.0;
  joint.amp[static_cast<std::uint64_t>(plaintext) << kw] = 1.0;
  apply_template(joint, build_template(config), params);

  // Permutation unitary |k>|m> -> |k>|perm_k(m)>, then the message marginal.
  std::vector<double> joint_dist(blocks, 0.0);
  for (std::uint32_t k = 0; k < keys; ++k)
    for (std::uint32_t m = 0; m < blocks; ++m) {
      std::uint64_t idx = (static_cast<std::uint64_t>(m) << kw) | k;
      joint_dist[cipher.perm[k][m]] += std::norm(joint.amp[idx]);
    }

  // Improved circuit: sample keys with |c_k|^2, encrypt classically.
  Statevector key_state = evaluate(config, params);
  std::vector<double> key_probs = probabilities(key_state);
  std::vector<double> classical_dist(blocks, 0.0);
  for (std::uint32_t k = 0; k < keys; ++k)
    classical_dist[cipher.perm[k][plaintext]] += key_probs[k];

  double tvd = 0.0;
  for (std::uint32_t m = 0; m < blocks; ++m)
    tvd += std::abs(joint_dist[m] - classical_dist[m]);
  return 0.5 * tvd;
}

}  // namespace vqaa
