#pragma once

#include <cstdint>
#include <random>

#include "vqaa/bitstring.hpp"

namespace vqaa {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Seedable random stream. Independent streams are derived from
// (master seed, stream id, substream) so parallel trials never share state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  static RngStream derive(std::uint64_t master, std::uint64_t stream_id,
                          std::uint64_t substream = 0) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ (stream_id * 0xD6E8FEB86659FD93ull));
    s = splitmix64(s ^ (substream * 0xA5A5A5A5A5A5A5A5ull));
    return RngStream(s);
  }

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, 1).
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  // Uniform in (-pi, pi].
  double angle();

  // Unbiased uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  BitString bitstring(int width) {
    BitString out(width);
    for (int i = 0; i < width; ++i) out.set_bit(i, static_cast<int>(next() & 1));
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace vqaa
