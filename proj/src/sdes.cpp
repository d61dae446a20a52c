#include <stdexcept>

#include "vqaa/targets.hpp"

namespace vqaa {

namespace {

constexpr int kP10[10] = {3, 5, 2, 7, 4, 10, 1, 9, 8, 6};
constexpr int kP8[8] = {6, 3, 7, 4, 8, 5, 10, 9};
constexpr int kIP[8] = {2, 6, 3, 1, 4, 8, 5, 7};
constexpr int kIPInv[8] = {4, 1, 3, 5, 7, 2, 8, 6};
constexpr int kEP[8] = {4, 1, 2, 3, 2, 3, 4, 1};
constexpr int kP4[4] = {2, 4, 3, 1};
constexpr int kS0[4][4] = {{1, 0, 3, 2}, {3, 2, 1, 0}, {0, 2, 1, 3}, {3, 1, 3, 2}};
constexpr int kS1[4][4] = {{0, 1, 2, 3}, {2, 0, 1, 3}, {3, 0, 1, 0}, {2, 1, 0, 3}};

template <int N>
BitString permute(const BitString& in, const int (&table)[N]) {
  BitString out(N);
  for (int i = 0; i < N; ++i) out.set_bit(i, in.bit(table[i] - 1));
  return out;
}

BitString rotate_halves(const BitString& bits, int k) {
  BitString out(10);
  for (int i = 0; i < 5; ++i) {
    out.set_bit(i, bits.bit((i + k) % 5));
    out.set_bit(5 + i, bits.bit(5 + (i + k) % 5));
  }
  return out;
}

void subkeys(const BitString& key, BitString& k1, BitString& k2) {
  BitString t = permute(key, kP10);
  t = rotate_halves(t, 1);
  k1 = permute(t, kP8);
  t = rotate_halves(t, 2);
  k2 = permute(t, kP8);
}

BitString sbox_lookup(const int (&box)[4][4], const BitString& four) {
  int row = four.bit(0) * 2 + four.bit(3);
  int col = four.bit(1) * 2 + four.bit(2);
  return BitString::from_uint(box[row][col], 2);
}

BitString feistel_round(const BitString& block, const BitString& subkey) {
  BitString left = block.slice(0, 4);
  BitString right = block.slice(4, 4);
  BitString expanded = permute(right, kEP);
  BitString t(8);
  for (int i = 0; i < 8; ++i) t.set_bit(i, expanded.bit(i) ^ subkey.bit(i));
  BitString s = sbox_lookup(kS0, t.slice(0, 4)).concat(sbox_lookup(kS1, t.slice(4, 4)));
  BitString p4 = permute(s, kP4);
  BitString out(8);
  for (int i = 0; i < 4; ++i) out.set_bit(i, left.bit(i) ^ p4.bit(i));
  for (int i = 0; i < 4; ++i) out.set_bit(4 + i, right.bit(i));
  return out;
}

BitString swap_halves(const BitString& block) {
  return block.slice(4, 4).concat(block.slice(0, 4));
}

BitString run(const BitString& key, const BitString& block, bool decrypt) {
  if (key.width() != 10) throw std::invalid_argument("S-DES key must be 10 bits");
  if (block.width() != 8) throw std::invalid_argument("S-DES block must be 8 bits");
  BitString k1, k2;
  subkeys(key, k1, k2);
  if (decrypt) std::swap(k1, k2);
  BitString t = permute(block, kIP);
  t = feistel_round(t, k1);
  t = swap_halves(t);
  t = feistel_round(t, k2);
  return permute(t, kIPInv);
}

}  // namespace

BitString sdes_encrypt(const BitString& key, const BitString& plain) {
  return run(key, plain, false);
}

BitString sdes_decrypt(const BitString& key, const BitString& cipher) {
  return run(key, cipher, true);
}

}  // namespace vqaa
