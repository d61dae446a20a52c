#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vqaa/ansatz.hpp"
#include "vqaa/cost.hpp"
#include "vqaa/encoding.hpp"
#include "vqaa/optimizer.hpp"
#include "vqaa/targets.hpp"

namespace vqaa {

struct AttackConfig {
  AttackTarget target;
  AnsatzConfig ansatz;
  OptimizerConfig optimizer;
  EncodingMode encoding;
  std::uint64_t master_seed = 0;
  std::uint64_t max_iterations = 512;
};

struct AttackResult {
  bool success = false;
  std::optional<BitString> recovered_key;
  std::uint64_t iterations = 0;    // completed optimizer steps
  std::uint64_t measurements = 0;  // cost evaluations, probes convention
  double wall_seconds = 0.0;
  std::vector<std::pair<std::uint64_t, int>> cost_trace;
};

// Improved-VQAA loop: evaluate ansatz, decode a key, score it by
// Hamming distance, run one optimizer step; a zero sampled cost anywhere
// (main sample or probe) ends the run after key verification.
AttackResult run_attack(const AttackConfig& config);

struct HybridResult {
  bool success = false;
  std::optional<BitString> recovered_key;
  std::uint64_t shard_count = 0;
  double mean_shard_measurements = 0.0;
  double mean_shard_iterations = 0.0;
  // (mean shard measurements) x shard count, the parallel-processor
  // accounting convention.
  double aggregate_measurements = 0.0;
  std::vector<AttackResult> shards;
};

// Runs one attack per prefix value with the quantum register covering
// only the key suffix.
HybridResult run_hybrid_attack(const AttackConfig& config, int prefix_width);

struct BruteForceResult {
  BitString key;
  std::uint64_t trials = 0;
  bool found = false;
};

// Enumerates keys in a seeded pseudo-random order until the cost is zero.
BruteForceResult brute_force(const AttackTarget& target, RngStream& rng,
                             std::uint64_t max_trials = 0);

// Bijective keyed map on small blocks; stand-in for the unitary cipher
// of the joint-register circuit.
struct ToyCipher {
  int key_bits = 0;
  int block_bits = 0;
  // perm[k][p] = ciphertext; each row is a permutation of the block space.
  std::vector<std::vector<std::uint32_t>> perm;

  static ToyCipher random(int key_bits, int block_bits, RngStream& rng);
  bool bijective() const;
};

// Total-variation distance between the ciphertext distribution of the
// joint-register circuit (ansatz on key qubits, |p> message register,
// permutation unitary, message marginal) and the distribution obtained
// by sampling keys and encrypting classically.
double equivalence_check(const ToyCipher& cipher, const AnsatzConfig& config,
                         std::span<const double> params, std::uint32_t plaintext);

}  // namespace vqaa
