#include "vqaa/qsim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vqaa {

namespace {

// Below this dimension the OpenMP fork/join overhead dominates; the
// attack registers (4-8 qubits) always take the serial path.
constexpr std::uint64_t kParallelDim = 1ull << 12;

void check_qubit(const Statevector& state, int qubit) {
  if (qubit < 0 || qubit >= state.n_qubits)
    throw std::invalid_argument("qubit index out of range");
}

inline std::uint64_t pair_base(std::uint64_t i, int qubit) {
  std::uint64_t mask = (1ull << qubit) - 1;
  return ((i & ~mask) << 1) | (i & mask);
}

}  // namespace

Statevector new_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("n_qubits must be in [1, 16]");
  Statevector state;
  state.n_qubits = n_qubits;
  state.amp.assign(1ull << n_qubits, cplx(0.0, 0.0));
  state.amp[0] = 1.0;
  return state;
}

std::array<cplx, 4> u_matrix(double theta, double phi, double lambda) {
  double c = std::cos(theta / 2.0);
  double s = std::sin(theta / 2.0);
  return {cplx(c, 0.0), -std::polar(s, lambda), std::polar(s, phi),
          std::polar(c, phi + lambda)};
}

void apply_u(Statevector& state, int qubit, double theta, double phi, double lambda) {
  check_qubit(state, qubit);
  auto u = u_matrix(theta, phi, lambda);
  std::uint64_t half = state.dim() >> 1;
  std::uint64_t step = 1ull << qubit;
  if (state.dim() >= kParallelDim) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(half); ++i) {
      std::uint64_t i0 = pair_base(static_cast<std::uint64_t>(i), qubit);
      std::uint64_t i1 = i0 | step;
      cplx a0 = state.amp[i0], a1 = state.amp[i1];
      state.amp[i0] = u[0] * a0 + u[1] * a1;
      state.amp[i1] = u[2] * a0 + u[3] * a1;
    }
  } else {
    for (std::uint64_t i = 0; i < half; ++i) {
      std::uint64_t i0 = pair_base(i, qubit);
      std::uint64_t i1 = i0 | step;
      cplx a0 = state.amp[i0], a1 = state.amp[i1];
      state.amp[i0] = u[0] * a0 + u[1] * a1;
      state.amp[i1] = u[2] * a0 + u[3] * a1;
    }
  }
}

void apply_h(Statevector& state, int qubit) {
  // H = U(pi/2, 0, pi), exactly (no global phase discrepancy).
  apply_u(state, qubit, std::numbers::pi / 2.0, 0.0, std::numbers::pi);
}

void apply_cnot(Statevector& state, int control, int target) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) throw std::invalid_argument("cnot control == target");
  std::uint64_t cbit = 1ull << control;
  std::uint64_t tbit = 1ull << target;
  std::uint64_t dim = state.dim();
  if (dim >= kParallelDim) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(dim); ++i) {
      auto j = static_cast<std::uint64_t>(i);
      if ((j & cbit) && !(j & tbit)) std::swap(state.amp[j], state.amp[j | tbit]);
    }
  } else {
    for (std::uint64_t j = 0; j < dim; ++j)
      if ((j & cbit) && !(j & tbit)) std::swap(state.amp[j], state.amp[j | tbit]);
  }
}

std::vector<double> probabilities(const Statevector& state) {
  std::vector<double> p(state.dim());
  for (std::uint64_t i = 0; i < state.dim(); ++i) p[i] = std::norm(state.amp[i]);
  return p;
}

double norm_sq(const Statevector& state) {
  double s = 0.0;
  for (const cplx& a : state.amp) s += std::norm(a);
  return s;
}

std::uint64_t sample_index(const Statevector& state, RngStream& rng) {
  double u = rng.uniform();
  double acc = 0.0;
  std::uint64_t last = state.dim() - 1;
  for (std::uint64_t i = 0; i < last; ++i) {
    acc += std::norm(state.amp[i]);
    if (u < acc) return i;
  }
  return last;
}

std::array<cplx, 4> reduced_density_matrix(const Statevector& state, int qubit) {
  check_qubit(state, qubit);
  std::uint64_t step = 1ull << qubit;
  std::uint64_t half = state.dim() >> 1;
  cplx r00 = 0.0, r01 = 0.0, r11 = 0.0;
  for (std::uint64_t i = 0; i < half; ++i) {
    std::uint64_t i0 = pair_base(i, qubit);
    std::uint64_t i1 = i0 | step;
    r00 += state.amp[i0] * std::conj(state.amp[i0]);
    r01 += state.amp[i0] * std::conj(state.amp[i1]);
    r11 += state.amp[i1] * std::conj(state.amp[i1]);
  }
  return {r00, r01, std::conj(r01), r11};
}

namespace serial {

void apply_u(Statevector& state, int qubit, double theta, double phi, double lambda) {
  check_qubit(state, qubit);
  auto u = u_matrix(theta, phi, lambda);
  std::uint64_t half = state.dim() >> 1;
  std::uint64_t step = 1ull << qubit;
  for (std::uint64_t i = 0; i < half; ++i) {
    std::uint64_t i0 = pair_base(i, qubit);
    std::uint64_t i1 = i0 | step;
    cplx a0 = state.amp[i0], a1 = state.amp[i1];
    state.amp[i0] = u[0] * a0 + u[1] * a1;
    state.amp[i1] = u[2] * a0 + u[3] * a1;
  }
}

void apply_cnot(Statevector& state, int control, int target) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) throw std::invalid_argument("cnot control == target");
  std::uint64_t cbit = 1ull << control;
  std::uint64_t tbit = 1ull << target;
  for (std::uint64_t j = 0; j < state.dim(); ++j)
    if ((j & cbit) && !(j & tbit)) std::swap(state.amp[j], state.amp[j | tbit]);
}

}  // namespace serial

}  // namespace vqaa
