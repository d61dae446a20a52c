#pragma once

#include <span>

#include "vqaa/ansatz.hpp"
#include "vqaa/bitstring.hpp"
#include "vqaa/targets.hpp"

namespace vqaa {

// Popcount of a XOR b; widths must match.
int hamming(const BitString& a, const BitString& b);

// Distance between the key's output and the known output. A collision
// target's excluded key scores the full output width.
int key_cost(const AttackTarget& target, const BitString& key);

// Exact expectation sum_k |c_k|^2 cost(k) for orthogonal encoding;
// deterministic test oracle only, the attack loop uses sampled costs.
double expected_cost(const AttackTarget& target, const AnsatzConfig& config,
                     std::span<const double> params);

}  // namespace vqaa
