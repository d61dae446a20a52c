#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "vqaa/rng.hpp"

namespace vqaa {

using cplx = std::complex<double>;

// Dense statevector over n qubits, flat array indexed by computational
// basis integer. Qubit 0 is the least significant bit of the index.
struct Statevector {
  int n_qubits = 0;
  std::vector<cplx> amp;

  std::uint64_t dim() const { return amp.size(); }
};

constexpr int kMaxQubits = 16;

Statevector new_state(int n_qubits);

// Column-major free single-qubit rotation:
//   [ cos(t/2)            -e^{il} sin(t/2)     ]
//   [ e^{ip} sin(t/2)      e^{i(p+l)} cos(t/2) ]
std::array<cplx, 4> u_matrix(double theta, double phi, double lambda);

void apply_u(Statevector& state, int qubit, double theta, double phi, double lambda);
void apply_h(Statevector& state, int qubit);
void apply_cnot(Statevector& state, int control, int target);

std::vector<double> probabilities(const Statevector& state);
double norm_sq(const Statevector& state);

// Draws a basis index with probability |amp_k|^2.
std::uint64_t sample_index(const Statevector& state, RngStream& rng);

// Partial trace over all qubits except `qubit`; row-major 2x2.
std::array<cplx, 4> reduced_density_matrix(const Statevector& state, int qubit);

// Plain single-threaded kernels, kept as the reference the OpenMP
// kernels are tested and benchmarked against.
namespace serial {
void apply_u(Statevector& state, int qubit, double theta, double phi, double lambda);
void apply_cnot(Statevector& state, int control, int target);
}  // namespace serial

}  // namespace vqaa
