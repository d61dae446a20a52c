#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vqaa {

// Fixed-width bit sequence. Index 0 is the most significant bit of the
// hex rendering, matching published cipher test-vector conventions.
class BitString {
 public:
  BitString() = default;
  explicit BitString(int width) : bits_(width, 0) {}

  static BitString from_hex(const std::string& hex, int width);
  static BitString from_uint(std::uint64_t value, int width);
  static BitString from_bits(const std::string& bits01);

  int width() const { return static_cast<int>(bits_.size()); }
  int bit(int i) const { return bits_[i]; }
  void set_bit(int i, int v) { bits_[i] = static_cast<std::uint8_t>(v & 1); }

  std::string to_hex() const;
  std::string to_bin() const;
  std::uint64_t to_uint() const;  // width <= 64
  std::vector<std::uint8_t> to_bytes() const;  // width multiple of 8

  BitString slice(int begin, int len) const;
  BitString concat(const BitString& other) const;

  bool operator==(const BitString& other) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace vqaa
