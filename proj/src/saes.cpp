#include <stdexcept>

#include "vqaa/targets.hpp"

namespace vqaa {

namespace {

constexpr int kSBox[16] = {0x9, 0x4, 0xA, 0xB, 0xD, 0x1, 0x8, 0x5,
                           0x6, 0x2, 0x0, 0x3, 0xC, 0xE, 0xF, 0x7};
constexpr int kSBoxInv[16] = {0xA, 0x5, 0x9, 0xB, 0x1, 0x7, 0x8, 0xF,
                              0x6, 0x0, 0x2, 0x3, 0xC, 0x4, 0xD, 0xE};

// GF(16) with modulus x^4 + x + 1.
int gmul(int a, int b) {
  int p = 0;
  for (int i = 0; i < 4; ++i) {
    if (b & 1) p ^= a;
    int hi = a & 0x8;
    a = (a << 1) & 0xF;
    if (hi) a ^= 0x3;
    b >>= 1;
  }
  return p;
}

struct Nibbles {
  int n[4];  // column-major state: [s00, s10, s01, s11]
};

Nibbles split(int w16) {
  return {{(w16 >> 12) & 0xF, (w16 >> 8) & 0xF, (w16 >> 4) & 0xF, w16 & 0xF}};
}

int join(const Nibbles& s) {
  return (s.n[0] << 12) | (s.n[1] << 8) | (s.n[2] << 4) | s.n[3];
}

Nibbles sub_nibbles(Nibbles s, const int (&box)[16]) {
  for (int& v : s.n) v = box[v];
  return s;
}

Nibbles shift_row(Nibbles s) {
  std::swap(s.n[1], s.n[3]);
  return s;
}

Nibbles mix_columns(Nibbles s, int off_diag) {
  return {{s.n[0] ^ gmul(off_diag, s.n[1]), s.n[1] ^ gmul(off_diag, s.n[0]),
           s.n[2] ^ gmul(off_diag, s.n[3]), s.n[3] ^ gmul(off_diag, s.n[2])}};
}

void key_expand(int key, int round_keys[3]) {
  int w[6];
  w[0] = (key >> 8) & 0xFF;
  w[1] = key & 0xFF;
  auto g = [](int b, int rcon) {
    int hi = kSBox[b & 0xF];
    int lo = kSBox[(b >> 4) & 0xF];
    return ((hi << 4) | lo) ^ rcon;
  };
  w[2] = w[0] ^ g(w[1], 0x80);
  w[3] = w[2] ^ w[1];
  w[4] = w[2] ^ g(w[3], 0x30);
  w[5] = w[4] ^ w[3];
  round_keys[0] = (w[0] << 8) | w[1];
  round_keys[1] = (w[2] << 8) | w[3];
  round_keys[2] = (w[4] << 8) | w[5];
}

void check_widths(const BitString& key, const BitString& block) {
  if (key.width() != 16) throw std::invalid_argument("S-AES key must be 16 bits");
  if (block.width() != 16) throw std::invalid_argument("S-AES block must be 16 bits");
}

}  // namespace

BitString saes_encrypt(const BitString& key, const BitString& plain) {
  check_widths(key, plain);
  int rk[3];
  key_expand(static_cast<int>(key.to_uint()), rk);
  Nibbles s = split(static_cast<int>(plain.to_uint()) ^ rk[0]);
  s = sub_nibbles(s, kSBox);
  s = shift_row(s);
  s = mix_columns(s, 4);
  s = split(join(s) ^ rk[1]);
  s = sub_nibbles(s, kSBox);
  s = shift_row(s);
  return BitString::from_uint(join(s) ^ rk[2], 16);
}

BitString saes_decrypt(const BitString& key, const BitString& cipher) {
  check_widths(key, cipher);
  int rk[3];
  key_expand(static_cast<int>(key.to_uint()), rk);
  Nibbles s = split(static_cast<int>(cipher.to_uint()) ^ rk[2]);
  s = shift_row(s);
  s = sub_nibbles(s, kSBoxInv);
  // Inverse MixColumn matrix is [[9, 2], [2, 9]].
  s = split(join(s) ^ rk[1]);
  Nibbles t = {{gmul(9, s.n[0]) ^ gmul(2, s.n[1]), gmul(9, s.n[1]) ^ gmul(2, s.n[0]),
                gmul(9, s.n[2]) ^ gmul(2, s.n[3]), gmul(9, s.n[3]) ^ gmul(2, s.n[2])}};
  t = shift_row(t);
  t = sub_nibbles(t, kSBoxInv);
  return BitString::from_uint(join(t) ^ rk[0], 16);
}

}  // namespace vqaa
