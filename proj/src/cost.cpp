#include "vqaa/cost.hpp"

#include <stdexcept>

namespace vqaa {

int hamming(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) throw std::invalid_argument("hamming width mismatch");
  int d = 0;
  for (int i = 0; i < a.width(); ++i) d += a.bit(i) ^ b.bit(i);
  return d;
}

int key_cost(const AttackTarget& target, const BitString& key) {
  if (key.width() != target.key_width) throw std::invalid_argument("key width mismatch");
  if (target.excluded_key && key == *target.excluded_key)
    return target.known_output.width();
  return hamming(target.evaluate(key), target.known_output);
}

double expected_cost(const AttackTarget& target, const AnsatzConfig& config,
                     std::span<const double> params) {
  if (target.key_width != config.n_qubits)
    throw std::invalid_argument("expected_cost requires key width == qubit count");
  Statevector state = evaluate(config, params);
  std::vector<double> probs = probabilities(state);
  double total = 0.0;
  for (std::uint64_t k = 0; k < probs.size(); ++k) {
    if (probs[k] == 0.0) continue;
    BitString key(config.n_qubits);
    for (int q = 0; q < config.n_qubits; ++q)
      key.set_bit(q, static_cast<int>((k >> q) & 1));
    total += probs[k] * key_cost(target, key);
  }
  return total;
}

}  // namespace vqaa
