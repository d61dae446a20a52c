#include "vqaa/bitstring.hpp"

#include <stdexcept>

namespace vqaa {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("bad hex digit");
}

}  // namespace

BitString BitString::from_hex(const std::string& hex, int width) {
  if (width <= 0) throw std::invalid_argument("width must be positive");
  int digits = (width + 3) / 4;
  if (static_cast<int>(hex.size()) != digits)
    throw std::invalid_argument("hex length does not match width");
  int pad = digits * 4 - width;
  BitString out(width);
  for (int d = 0; d < digits; ++d) {
    int v = hex_value(hex[d]);
    for (int b = 0; b < 4; ++b) {
      int pos = d * 4 + b - pad;
      int bit = (v >> (3 - b)) & 1;
      if (pos < 0) {
        if (bit) throw std::invalid_argument("nonzero pad bits in hex");
      } else {
        out.bits_[pos] = static_cast<std::uint8_t>(bit);
      }
    }
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t value, int width) {
  if (width <= 0 || width > 64) throw std::invalid_argument("width out of range");
  if (width < 64 && (value >> width) != 0)
    throw std::invalid_argument("value does not fit width");
  BitString out(width);
  for (int i = 0; i < width; ++i)
    out.bits_[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1);
  return out;
}

BitString BitString::from_bits(const std::string& bits01) {
  BitString out(static_cast<int>(bits01.size()));
  for (size_t i = 0; i < bits01.size(); ++i) {
    if (bits01[i] != '0' && bits01[i] != '1')
      throw std::invalid_argument("bad bit character");
    out.bits_[i] = static_cast<std::uint8_t>(bits01[i] - '0');
  }
  return out;
}

std::string BitString::to_hex() const {
  int digits = (width() + 3) / 4;
  int pad = digits * 4 - width();
  std::string out(digits, '0');
  static const char* kHex = "0123456789ABCDEF";
  for (int d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      int pos = d * 4 + b - pad;
      v = (v << 1) | (pos < 0 ? 0 : bits_[pos]);
    }
    out[d] = kHex[v];
  }
  return out;
}

std::string BitString::to_bin() const {
  std::string out(width(), '0');
  for (int i = 0; i < width(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

std::uint64_t BitString::to_uint() const {
  if (width() > 64) throw std::invalid_argument("too wide for uint64");
  std::uint64_t v = 0;
  for (int i = 0; i < width(); ++i) v = (v << 1) | bits_[i];
  return v;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  if (width() % 8 != 0) throw std::invalid_argument("width not a byte multiple");
  std::vector<std::uint8_t> out(width() / 8, 0);
  for (int i = 0; i < width(); ++i)
    out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) | bits_[i]);
  return out;
}

BitString BitString::slice(int begin, int len) const {
  if (begin < 0 || len <= 0 || begin + len > width())
    throw std::invalid_argument("slice out of range");
  BitString out(len);
  for (int i = 0; i < len; ++i) out.bits_[i] = bits_[begin + i];
  return out;
}

BitString BitString::concat(const BitString& other) const {
  BitString out(width() + other.width());
  for (int i = 0; i < width(); ++i) out.bits_[i] = bits_[i];
  for (int i = 0; i < other.width(); ++i) out.bits_[width() + i] = other.bits_[i];
  return out;
}

}  // namespace vqaa
