#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latteo/bytes.hpp"

namespace latteo::crypto {

// Must be called before any other function here; idempotent and thread-safe.
void init();

Bytes random_bytes(std::size_t n);
Bytes sha256(BytesView data);

// --------------------------------------------------------------------------
// Symmetric AEAD (256-bit key, 96-bit nonce, 16-byte tag).
// Sealed wire layout: [1-byte version][12-byte nonce][ciphertext || tag].

struct SymmetricKey {
  std::array<std::uint8_t, 32> bytes{};

  static SymmetricKey generate();
  static SymmetricKey from_bytes(BytesView b);
  Bytes to_bytes() const { return Bytes(bytes.begin(), bytes.end()); }
  bool operator==(const SymmetricKey&) const = default;
};

inline SymmetricKey gen_symmetric_key() { return SymmetricKey::generate(); }

struct Sealed {
  Bytes blob;  // full wire layout

  Bytes encode() const { return blob; }
  static Sealed decode(BytesView b);
  bool operator==(const Sealed&) const = default;
};

// Nonces are [4-byte process-wide counter || 8 random bytes]: structurally
// unique per process lifetime and safe under concurrent sealing.
Sealed seal(const SymmetricKey& key, BytesView plaintext);
Bytes open(const SymmetricKey& key, const Sealed& sealed);  // throws "integrity failure"

// --------------------------------------------------------------------------
// Signatures (Ed25519) and certificates.

struct SigningKeyPair {
  Bytes vk;  // 32 bytes
  Bytes sk;  // 64 bytes

  static SigningKeyPair generate();
};

Bytes sign(const SigningKeyPair& key, BytesView body);
// Malformed keys or signatures yield false, never a throw.
bool verify(BytesView vk, BytesView body, BytesView signature) noexcept;

struct Certificate {
  std::string identity;
  Bytes verification_key;
  std::string issuer_id;
  Bytes issuer_signature;  // covers (identity, verification_key)

  Bytes signed_body() const;  // canonical bytes the issuer signs
  Bytes encode() const;
  static Certificate decode(BytesView b);
  bool operator==(const Certificate&) const = default;
};

Certificate issue_cert(const SigningKeyPair& issuer, const std::string& issuer_id,
                       const std::string& identity, BytesView subject_vk);

// Chain order: chain[0] issued by root, chain[i+1] issued by chain[i].
bool verify_cert_chain(BytesView root_vk, std::span<const Certificate> chain) noexcept;

struct SignedMessage {
  Bytes body;
  Bytes signature;
  Certificate signer_cert;

  Bytes encode() const;
  static SignedMessage decode(BytesView b);
};

SignedMessage sign_message(const SigningKeyPair& key, Certificate cert, Bytes body);

// --------------------------------------------------------------------------
// Anonymous KEM (X25519 sealed boxes) used for ABE leaf-share encapsulation.

struct KemKeyPair {
  Bytes pk;  // 32 bytes
  Bytes sk;  // 32 bytes

  static KemKeyPair generate();
};

Bytes kem_seal(BytesView recipient_pk, BytesView plaintext);
// throws "decode failure" when the box does not open
Bytes kem_open(BytesView pk, BytesView sk, BytesView box);

// --------------------------------------------------------------------------
// Ephemeral key agreement for attested channels. Both sides derive the same
// key; the transcript binds both public halves.

struct EphemeralKeyPair {
  Bytes pk;  // 32 bytes
  Bytes sk;  // 32 bytes

  static EphemeralKeyPair generate();
};

SymmetricKey derive_channel_key(const EphemeralKeyPair& mine, BytesView their_pk);

}  // namespace latteo::crypto
