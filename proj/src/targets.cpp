#include "vqaa/targets.hpp"

#include <stdexcept>

namespace vqaa {

namespace {
#include "blowfish_vectors.inc"
}  // namespace

std::span<const BlowfishVector> blowfish_test_vectors() { return kEcbVectors; }

BitString toy_hash(const BitString& input, int t) {
  if (t != 8 && t != 16 && t != 24) throw std::invalid_argument("digest width must be 8, 16 or 24");
  if (input.width() % 8 != 0) throw std::invalid_argument("input width must be a byte multiple");
  std::uint32_t h = 2166136261u;
  for (std::uint8_t byte : input.to_bytes()) {
    h ^= byte;
    h *= 16777619u;
  }
  return BitString::from_uint(h & ((1u << t) - 1), t);
}

AttackTarget make_cipher_target(CipherKind kind, const BitString& secret_key,
                                const BitString& plaintext) {
  AttackTarget target;
  target.public_input = plaintext;
  switch (kind) {
    case CipherKind::SDes:
      target.name = "sdes";
      target.key_width = 10;
      target.evaluate = [plaintext](const BitString& k) { return sdes_encrypt(k, plaintext); };
      break;
    case CipherKind::SAes:
      target.name = "saes";
      target.key_width = 16;
      target.evaluate = [plaintext](const BitString& k) { return saes_encrypt(k, plaintext); };
      break;
    case CipherKind::Blowfish:
      target.name = "blowfish";
      target.key_width = secret_key.width();
      target.evaluate = [plaintext](const BitString& k) { return blowfish_encrypt(k, plaintext); };
      break;
  }
  if (secret_key.width() != target.key_width)
    throw std::invalid_argument("secret key width does not match cipher");
  target.known_output = target.evaluate(secret_key);
  return target;
}

AttackTarget make_hash_collision_target(const BitString& document,
                                        int mutable_segment_width, int t) {
  if (mutable_segment_width <= 0 || mutable_segment_width >= document.width())
    throw std::invalid_argument("bad mutable segment width");
  int fixed = document.width() - mutable_segment_width;
  BitString head = document.slice(0, fixed);
  BitString original_segment = document.slice(fixed, mutable_segment_width);
  AttackTarget target;
  target.name = "hash-collision";
  target.key_width = mutable_segment_width;
  target.public_input = document;
  target.evaluate = [head, t](const BitString& segment) {
    return toy_hash(head.concat(segment), t);
  };
  target.known_output = toy_hash(document, t);
  target.excluded_key = original_segment;
  return target;
}

AttackTarget make_prefixed_target(const AttackTarget& target, const BitString& prefix) {
  if (prefix.width() <= 0 || prefix.width() >= target.key_width)
    throw std::invalid_argument("bad prefix width");
  AttackTarget out;
  out.name = target.name + "+prefix";
  out.key_width = target.key_width - prefix.width();
  out.public_input = target.public_input;
  auto inner = target.evaluate;
  out.evaluate = [inner, prefix](const BitString& suffix) {
    return inner(prefix.concat(suffix));
  };
  out.known_output = target.known_output;
  if (target.excluded_key && target.excluded_key->width() == target.key_width &&
      target.excluded_key->slice(0, prefix.width()) == prefix) {
    out.excluded_key = target.excluded_key->slice(prefix.width(), out.key_width);
  }
  return out;
}

}  // namespace vqaa
