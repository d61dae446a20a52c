#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vqaa/qsim.hpp"

namespace vqaa {

struct AnsatzConfig {
  int n_qubits = 0;
  int n_layers = 3;
  std::uint64_t cnot_seed = 0xC0FFEEull;
  bool lambda_zero = true;
  int extra_cnots_per_layer = 4;
};

int param_count(const AnsatzConfig& config);

struct GateSlot {
  enum class Kind { H, U, Cnot };
  Kind kind;
  int qubit = 0;    // target for Cnot
  int control = -1; // Cnot only
  // Parameter slots; -1 means fixed zero (lambda when lambda_zero).
  int theta_idx = -1;
  int phi_idx = -1;
  int lambda_idx = -1;
};

// Per layer: Hadamards (first layer only), a U slot on every qubit,
// the CNOT ring [i -> i+1, n-1 -> i], then extra CNOTs drawn from a
// dedicated stream seeded by cnot_seed. Identical across calls.
std::vector<GateSlot> build_template(const AnsatzConfig& config);

// Applies the template to `state` with qubit indices shifted by
// `qubit_offset` (used for joint-register simulations).
void apply_template(Statevector& state, const std::vector<GateSlot>& gates,
                    std::span<const double> params, int qubit_offset = 0);

// Parameter order is layer-major, then qubit, then (theta, phi[, lambda]).
Statevector evaluate(const AnsatzConfig& config, std::span<const double> params);

}  // namespace vqaa
