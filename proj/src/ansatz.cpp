#include "vqaa/ansatz.hpp"

#include <stdexcept>

#include "vqaa/rng.hpp"

namespace vqaa {

int param_count(const AnsatzConfig& config) {
  return config.n_qubits * config.n_layers * (config.lambda_zero ? 2 : 3);
}

std::vector<GateSlot> build_template(const AnsatzConfig& config) {
  if (config.n_qubits < 1 || config.n_layers < 1)
    throw std::invalid_argument("bad ansatz config");
  int n = config.n_qubits;
  int per_qubit = config.lambda_zero ? 2 : 3;
  std::vector<GateSlot> gates;
  RngStream cnot_rng(splitmix64(config.cnot_seed));
  for (int layer = 0; layer < config.n_layers; ++layer) {
    if (layer == 0)
      for (int q = 0; q < n; ++q)
        gates.push_back({GateSlot::Kind::H, q});
    for (int q = 0; q < n; ++q) {
      GateSlot slot{GateSlot::Kind::U, q};
      int base = (layer * n + q) * per_qubit;
      slot.theta_idx = base;
      slot.phi_idx = base + 1;
      slot.lambda_idx = config.lambda_zero ? -1 : base + 2;
      gates.push_back(slot);
    }
    for (int i = 0; i + 1 < n; ++i) {
      gates.push_back({GateSlot::Kind::Cnot, i + 1, i});
      if (n - 1 != i) gates.push_back({GateSlot::Kind::Cnot, i, n - 1});
    }
    for (int e = 0; e < config.extra_cnots_per_layer && n >= 2; ++e) {
      int control = static_cast<int>(cnot_rng.below(n));
      int target = static_cast<int>(cnot_rng.below(n - 1));
      if (target >= control) ++target;
      gates.push_back({GateSlot::Kind::Cnot, target, control});
    }
  }
  return gates;
}

void apply_template(Statevector& state, const std::vector<GateSlot>& gates,
                    std::span<const double> params, int qubit_offset) {
  for (const GateSlot& g : gates) {
    switch (g.kind) {
      case GateSlot::Kind::H:
        apply_h(state, g.qubit + qubit_offset);
        break;
      case GateSlot::Kind::U: {
        double lambda = g.lambda_idx >= 0 ? params[g.lambda_idx] : 0.0;
        apply_u(state, g.qubit + qubit_offset, params[g.theta_idx],
                params[g.phi_idx], lambda);
        break;
      }
      case GateSlot::Kind::Cnot:
        apply_cnot(state, g.control + qubit_offset, g.qubit + qubit_offset);
        break;
    }
  }
}

Statevector evaluate(const AnsatzConfig& config, std::span<const double> params) {
  if (static_cast<int>(params.size()) != param_count(config))
    throw std::invalid_argument("parameter vector length mismatch");
  Statevector state = new_state(config.n_qubits);
  apply_template(state, build_template(config), params);
  return state;
}

}  // namespace vqaa
