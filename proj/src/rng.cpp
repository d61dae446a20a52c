#include "vqaa/rng.hpp"

#include <cmath>
#include <numbers>

namespace vqaa {

double RngStream::angle() {
  double u = uniform();  // [0, 1)
  return std::numbers::pi * (1.0 - 2.0 * u);  // (-pi, pi]
}

std::uint64_t RngStream::below(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

}  // namespace vqaa
