#include <cstring>
#include <stdexcept>

#include "vqaa/targets.hpp"

namespace vqaa {

namespace {
#include "blowfish_pi.inc"
}  // namespace

Blowfish::Blowfish(std::span<const std::uint8_t> key) {
  if (key.size() < 4 || key.size() > 56)
    throw std::invalid_argument("Blowfish key must be 4..56 bytes");
  std::memcpy(p_, kPInit, sizeof(p_));
  std::memcpy(s_[0], kSInit0, sizeof(s_[0]));
  std::memcpy(s_[1], kSInit1, sizeof(s_[1]));
  std::memcpy(s_[2], kSInit2, sizeof(s_[2]));
  std::memcpy(s_[3], kSInit3, sizeof(s_[3]));
  size_t j = 0;
  for (std::uint32_t& p : p_) {
    std::uint32_t data = 0;
    for (int b = 0; b < 4; ++b) {
      data = (data << 8) | key[j % key.size()];
      ++j;
    }
    p ^= data;
  }
  std::uint32_t l = 0, r = 0;
  for (int i = 0; i < 18; i += 2) {
    round_encrypt(l, r);
    ++setup_encryptions_;
    p_[i] = l;
    p_[i + 1] = r;
  }
  for (auto& box : s_)
    for (int i = 0; i < 256; i += 2) {
      round_encrypt(l, r);
      ++setup_encryptions_;
      box[i] = l;
      box[i + 1] = r;
    }
}

std::uint32_t Blowfish::feistel(std::uint32_t x) const {
  std::uint32_t a = (x >> 24) & 0xFF, b = (x >> 16) & 0xFF;
  std::uint32_t c = (x >> 8) & 0xFF, d = x & 0xFF;
  return ((s_[0][a] + s_[1][b]) ^ s_[2][c]) + s_[3][d];
}

void Blowfish::round_encrypt(std::uint32_t& l, std::uint32_t& r) const {
  for (int i = 0; i < 16; ++i) {
    l ^= p_[i];
    r ^= feistel(l);
    std::swap(l, r);
  }
  std::swap(l, r);
  r ^= p_[16];
  l ^= p_[17];
}

std::uint64_t Blowfish::encrypt_block(std::uint64_t block) const {
  auto l = static_cast<std::uint32_t>(block >> 32);
  auto r = static_cast<std::uint32_t>(block);
  round_encrypt(l, r);
  return (static_cast<std::uint64_t>(l) << 32) | r;
}

std::uint64_t Blowfish::decrypt_block(std::uint64_t block) const {
  auto l = static_cast<std::uint32_t>(block >> 32);
  auto r = static_cast<std::uint32_t>(block);
  for (int i = 17; i > 1; --i) {
    l ^= p_[i];
    r ^= feistel(l);
    std::swap(l, r);
  }
  std::swap(l, r);
  r ^= p_[1];
  l ^= p_[0];
  return (static_cast<std::uint64_t>(l) << 32) | r;
}

namespace {

Blowfish make_context(const BitString& key) {
  if (key.width() % 8 != 0 || key.width() < 32 || key.width() > 448)
    throw std::invalid_argument("Blowfish key width must be a byte multiple in [32, 448]");
  return Blowfish(key.to_bytes());
}

}  // namespace

BitString blowfish_encrypt(const BitString& key, const BitString& block) {
  if (block.width() != 64) throw std::invalid_argument("Blowfish block must be 64 bits");
  return BitString::from_uint(make_context(key).encrypt_block(block.to_uint()), 64);
}

BitString blowfish_decrypt(const BitString& key, const BitString& block) {
  if (block.width() != 64) throw std::invalid_argument("Blowfish block must be 64 bits");
  return BitString::from_uint(make_context(key).decrypt_block(block.to_uint()), 64);
}

}  // namespace vqaa
