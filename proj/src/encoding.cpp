#include "vqaa/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vqaa {

namespace {
constexpr double kPi = std::numbers::pi;
}

AnchorSet tetrahedron_anchors() {
  AnchorSet set;
  set.m = 4;
  set.bits_per_qubit = 2;
  double a = 1.0 / std::sqrt(3.0);
  double b = std::sqrt(2.0 / 3.0);
  set.anchors = {
      {cplx(1.0, 0.0), cplx(0.0, 0.0)},
      {cplx(a, 0.0), std::polar(b, 2.0 * kPi / 3.0)},
      {cplx(a, 0.0), std::polar(b, 4.0 * kPi / 3.0)},
      {cplx(a, 0.0), cplx(b, 0.0)},
  };
  return set;
}

AnchorSet sphere_anchors(int m) {
  if (m == 4) return tetrahedron_anchors();
  if (m != 16) throw std::invalid_argument("unsupported anchor count");
  AnchorSet set;
  set.m = 16;
  set.bits_per_qubit = 4;
  double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < 16; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / 16.0;
    double polar = std::acos(z);
    double azimuth = golden_angle * i;
    set.anchors.push_back(
        {cplx(std::cos(polar / 2.0), 0.0), std::polar(std::sin(polar / 2.0), azimuth)});
  }
  return set;
}

double anchor_fidelity(const std::array<cplx, 4>& rho, const std::array<cplx, 2>& phi) {
  // <phi|rho|phi>, real by hermiticity.
  cplx v = std::conj(phi[0]) * (rho[0] * phi[0] + rho[1] * phi[1]) +
           std::conj(phi[1]) * (rho[2] * phi[0] + rho[3] * phi[1]);
  return v.real();
}

BitString decode_key(const Statevector& state, const EncodingMode& mode, RngStream& rng) {
  if (mode.orthogonal) {
    std::uint64_t k = sample_index(state, rng);
    BitString out(state.n_qubits);
    for (int q = 0; q < state.n_qubits; ++q)
      out.set_bit(q, static_cast<int>((k >> q) & 1));
    return out;
  }
  const AnchorSet& set = mode.anchors;
  int bpq = set.bits_per_qubit;
  BitString out(state.n_qubits * bpq);
  for (int q = 0; q < state.n_qubits; ++q) {
    auto rho = reduced_density_matrix(state, q);
    int best = 0;
    double best_f = anchor_fidelity(rho, set.anchors[0]);
    for (int j = 1; j < set.m; ++j) {
      double f = anchor_fidelity(rho, set.anchors[j]);
      if (f > best_f) {
        best_f = f;
        best = j;
      }
    }
    for (int b = 0; b < bpq; ++b)
      out.set_bit(q * bpq + b, (best >> (bpq - 1 - b)) & 1);
  }
  return out;
}

Statevector encode_anchor_product(const BitString& bits, const AnchorSet& set) {
  int bpq = set.bits_per_qubit;
  if (bits.width() % bpq != 0) throw std::invalid_argument("width not a multiple of bits per qubit");
  int n = bits.width() / bpq;
  Statevector state = new_state(n);
  for (int q = 0; q < n; ++q) {
    int j = static_cast<int>(bits.slice(q * bpq, bpq).to_uint());
    const auto& phi = set.anchors[j];
    // Prepare |phi> on qubit q: U(theta, azimuth, 0)|0> with
    // cos(theta/2) = |phi_0|.
    double theta = 2.0 * std::acos(std::clamp(std::abs(phi[0]), 0.0, 1.0));
    double azimuth = std::arg(phi[1]);
    apply_u(state, q, theta, azimuth, 0.0);
  }
  return state;
}

}  // namespace vqaa
