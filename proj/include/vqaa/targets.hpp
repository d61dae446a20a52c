#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "vqaa/bitstring.hpp"

namespace vqaa {

// --- S-DES: 10-bit key, 8-bit block, two Feistel rounds.
BitString sdes_encrypt(const BitString& key, const BitString& plain);
BitString sdes_decrypt(const BitString& key, const BitString& cipher);

// --- S-AES: 16-bit key, 16-bit block, two SPN rounds over GF(16).
BitString saes_encrypt(const BitString& key, const BitString& plain);
BitString saes_decrypt(const BitString& key, const BitString& cipher);

// --- Blowfish: 32..448-bit key (byte multiple), 64-bit block.
class Blowfish {
 public:
  explicit Blowfish(std::span<const std::uint8_t> key);

  std::uint64_t encrypt_block(std::uint64_t block) const;
  std::uint64_t decrypt_block(std::uint64_t block) const;

  // Block encryptions performed by the key schedule (always 521).
  int setup_encryptions() const { return setup_encryptions_; }

 private:
  void round_encrypt(std::uint32_t& l, std::uint32_t& r) const;
  std::uint32_t feistel(std::uint32_t x) const;

  std::uint32_t p_[18];
  std::uint32_t s_[4][256];
  int setup_encryptions_ = 0;
};

BitString blowfish_encrypt(const BitString& key, const BitString& block);
BitString blowfish_decrypt(const BitString& key, const BitString& block);

struct BlowfishVector {
  const char* key_hex;
  const char* plain_hex;
  const char* cipher_hex;
};

// Published ECB known-answer set.
std::span<const BlowfishVector> blowfish_test_vectors();

// FNV-1a over the input bytes, truncated to the low t bits (t in {8,16,24}).
BitString toy_hash(const BitString& input, int t);

// Keyed one-way evaluation with a known target output.
struct AttackTarget {
  std::string name;
  int key_width = 0;
  std::function<BitString(const BitString&)> evaluate;
  BitString known_output;
  BitString public_input;
  // Set for collision targets: this key reproduces known_output but is
  // not a valid answer.
  std::optional<BitString> excluded_key;
};

enum class CipherKind { SDes, SAes, Blowfish };

AttackTarget make_cipher_target(CipherKind kind, const BitString& secret_key,
                                const BitString& plaintext);

// Collision target: the trailing `mutable_segment_width` bits of
// `document` are the key; the original segment value is excluded.
AttackTarget make_hash_collision_target(const BitString& document,
                                        int mutable_segment_width, int t);

// Restricts a target's key space to the suffix after a fixed prefix.
AttackTarget make_prefixed_target(const AttackTarget& target, const BitString& prefix);

}  // namespace vqaa
