#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latteo/bytes.hpp"
#include "latteo/policy.hpp"

namespace latteo::abe {

// Multi-authority ABE by linear secret sharing of a content-encryption key
// over the policy tree: additive split at AND, duplication at OR, byte-wise
// Shamir at THRESHOLD. Each leaf share is encapsulated to the matching
// attribute public key with an anonymous KEM (X25519 sealed box).

struct AttributePublicKey {
  std::string name;
  Bytes kem_pk;  // 32 bytes
};

struct AttributeSecretKey {
  std::string name;
  Bytes kem_pk;  // sealed-box opening needs both halves
  Bytes kem_sk;  // 32 bytes
};

// MasterKeyPair.public: one authority's attribute public keys.
struct AuthorityPublicKey {
  Bytes authority_id;  // 16 random bytes, assigned at setup
  std::uint32_t security_param = 0;
  std::vector<AttributePublicKey> attributes;

  Bytes encode() const;
  static AuthorityPublicKey decode(BytesView b);
  const AttributePublicKey* find(const std::string& name) const;
};

// MasterKeyPair.secret
struct AuthoritySecretKey {
  Bytes authority_id;
  std::vector<AttributeSecretKey> attributes;
};

struct MasterKeyPair {
  AuthorityPublicKey pub;
  AuthoritySecretKey sec;
};

// Per-cluster provisioned secret keys [A_e].
struct AttributeKey {
  std::string name;
  Bytes authority_id;
  Bytes kem_pk;
  Bytes kem_sk;
};

struct AttributeKeySet {
  std::string cluster_id;
  std::vector<AttributeKey> keys;

  std::set<std::string> attribute_names() const;
  Bytes encode() const;
  static AttributeKeySet decode(BytesView b);
};

struct AbeCiphertext {
  Policy policy;
  struct LeafShare {
    std::string attribute;
    Bytes authority_id;
    Bytes encapsulated;  // sealed box over the 32-byte share
  };
  std::vector<LeafShare> shares;  // pre-order leaf order
  Bytes sealed_payload;           // AEAD under the shared content key

  Bytes encode() const;
  static AbeCiphertext decode(BytesView b);
};

// ABE.Setup(1^lambda, n). Duplicate or empty attribute sets are rejected.
MasterKeyPair setup(std::uint32_t security_param_bits,
                    const std::vector<std::string>& attribute_names);

// ABE.KeyGen(M_sk, e): secret keys for the granted subset, tagged with the
// cluster id. Unknown attribute names are rejected by name.
AttributeKeySet keygen(const MasterKeyPair& authority, const std::string& cluster_id,
                       const std::vector<std::string>& granted);

// Merge key material issued to the same cluster by different authorities.
AttributeKeySet merge(const AttributeKeySet& a, const AttributeKeySet& b);

// ABE.Encrypt(M_pk, policy, payload). Every policy leaf must resolve to an
// attribute of some listed authority (first match wins); payload <= 1 KiB.
AbeCiphertext encrypt(std::span<const AuthorityPublicKey> authorities, const Policy& policy,
                      BytesView payload);

// ABE.Decrypt: original payload iff the keyset satisfies ct.policy
// ("access denied" otherwise, "decode failure" for malformed input).
Bytes decrypt(const AttributeKeySet& keyset, const AbeCiphertext& ct);

inline constexpr std::size_t kMaxPayload = 1024;

// Hybrid-envelope glue: C2 = ABE-wrapped symmetric key.
AbeCiphertext wrap_key(std::span<const AuthorityPublicKey> authorities, const Policy& policy,
                       const crypto::SymmetricKey& key);
crypto::SymmetricKey unwrap_key(const AttributeKeySet& keyset, const AbeCiphertext& ct);

}  // namespace latteo::abe
