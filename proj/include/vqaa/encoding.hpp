#pragma once

#include <array>
#include <complex>
#include <vector>

#include "vqaa/qsim.hpp"

namespace vqaa {

// m single-qubit pure states used as decoding anchors; anchor j carries
// the log2(m)-bit value j.
struct AnchorSet {
  int m = 0;
  int bits_per_qubit = 0;
  std::vector<std::array<cplx, 2>> anchors;
};

// Tetrahedron vertices on the Bloch sphere: |0> plus three states at
// amplitude 1/sqrt(3) with azimuths 2pi/3, 4pi/3, 0.
AnchorSet tetrahedron_anchors();

// m = 4 delegates to the tetrahedron; m = 16 is a spherical Fibonacci
// lattice (golden-angle azimuths, uniform-in-cosine polar spacing).
AnchorSet sphere_anchors(int m);

struct EncodingMode {
  bool orthogonal = true;
  AnchorSet anchors;

  static EncodingMode Orthogonal() { return {}; }
  static EncodingMode NonOrthogonal(AnchorSet set) {
    return {false, std::move(set)};
  }

  int bits_per_qubit() const { return orthogonal ? 1 : anchors.bits_per_qubit; }
  int key_bits(int n_qubits) const { return n_qubits * bits_per_qubit(); }
};

// Fidelity <phi|rho|phi> of a single-qubit state against a 2x2 density matrix.
double anchor_fidelity(const std::array<cplx, 4>& rho, const std::array<cplx, 2>& phi);

// Orthogonal mode samples the register; non-orthogonal mode picks the
// max-fidelity anchor per qubit from its exact reduced density matrix
// (ties to the lowest anchor index). Qubit 0's bits come first.
BitString decode_key(const Statevector& state, const EncodingMode& mode, RngStream& rng);

// Tensor product of anchor states realizing `bits`; test/roundtrip helper.
Statevector encode_anchor_product(const BitString& bits, const AnchorSet& set);

}  // namespace vqaa
