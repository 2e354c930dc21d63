#include "latteo/crypto.hpp"

#include <sodium.h>

#include <atomic>
#include <cstring>

namespace latteo::crypto {

namespace {

constexpr std::uint8_t kSealedVersion = 1;
constexpr std::size_t kNonceLen = crypto_aead_chacha20poly1305_ietf_NPUBBYTES;  // 12
constexpr std::size_t kTagLen = crypto_aead_chacha20poly1305_ietf_ABYTES;       // 16

std::atomic<std::uint32_t> g_nonce_counter{0};

}  // namespace

void init() {
  if (sodium_init() < 0) throw Error("entropy source failure: sodium_init");
}

Bytes random_bytes(std::size_t n) {
  init();
  Bytes out(n);
  randombytes_buf(out.data(), n);
  return out;
}

Bytes sha256(BytesView data) {
  init();
  Bytes out(crypto_hash_sha256_BYTES);
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

SymmetricKey SymmetricKey::generate() {
  init();
  SymmetricKey k;
  randombytes_buf(k.bytes.data(), k.bytes.size());
  return k;
}

SymmetricKey SymmetricKey::from_bytes(BytesView b) {
  if (b.size() != 32) throw Error("decode failure: symmetric key must be 32 bytes");
  SymmetricKey k;
  std::memcpy(k.bytes.data(), b.data(), 32);
  return k;
}

Sealed Sealed::decode(BytesView b) {
  if (b.size() < 1 + kNonceLen + kTagLen || b[0] != kSealedVersion)
    throw Error("decode failure: malformed sealed blob");
  return Sealed{Bytes(b.begin(), b.end())};
}

Sealed seal(const SymmetricKey& key, BytesView plaintext) {
  init();
  Bytes blob(1 + kNonceLen + plaintext.size() + kTagLen);
  blob[0] = kSealedVersion;
  std::uint32_t ctr = g_nonce_counter.fetch_add(1, std::memory_order_relaxed);
  for (int i = 0; i < 4; ++i) blob[1 + i] = static_cast<std::uint8_t>(ctr >> (24 - 8 * i));
  randombytes_buf(blob.data() + 5, kNonceLen - 4);
  unsigned long long clen = 0;
  crypto_aead_chacha20poly1305_ietf_encrypt(blob.data() + 1 + kNonceLen, &clen, plaintext.data(),
                                            plaintext.size(), nullptr, 0, nullptr,
                                            blob.data() + 1, key.bytes.data());
  return Sealed{std::move(blob)};
}

Bytes open(const SymmetricKey& key, const Sealed& sealed) {
  init();
  const Bytes& blob = sealed.blob;
  if (blob.size() < 1 + kNonceLen + kTagLen || blob[0] != kSealedVersion)
    throw Error("integrity failure: malformed sealed blob");
  std::size_t clen = blob.size() - 1 - kNonceLen;
  Bytes out(clen - kTagLen);
  unsigned long long mlen = 0;
  if (crypto_aead_chacha20poly1305_ietf_decrypt(out.data(), &mlen, nullptr,
                                                blob.data() + 1 + kNonceLen, clen, nullptr, 0,
                                                blob.data() + 1, key.bytes.data()) != 0)
    throw Error("integrity failure");
  out.resize(mlen);
  return out;
}

SigningKeyPair SigningKeyPair::generate() {
  init();
  SigningKeyPair kp;
  kp.vk.resize(crypto_sign_PUBLICKEYBYTES);
  kp.sk.resize(crypto_sign_SECRETKEYBYTES);
  crypto_sign_keypair(kp.vk.data(), kp.sk.data());
  return kp;
}

Bytes sign(const SigningKeyPair& key, BytesView body) {
  init();
  Bytes sig(crypto_sign_BYTES);
  crypto_sign_detached(sig.data(), nullptr, body.data(), body.size(), key.sk.data());
  return sig;
}

bool verify(BytesView vk, BytesView body, BytesView signature) noexcept {
  if (sodium_init() < 0) return false;
  if (vk.size() != crypto_sign_PUBLICKEYBYTES || signature.size() != crypto_sign_BYTES)
    return false;
  return crypto_sign_verify_detached(signature.data(), body.data(), body.size(), vk.data()) == 0;
}

Bytes Certificate::signed_body() const {
  ByteWriter w;
  w.u8(0x01);  // structure tag: certificate body
  w.var(identity);
  w.var(verification_key);
  return w.take();
}

Bytes Certificate::encode() const {
  ByteWriter w;
  w.u8(0x02);  // structure tag: certificate
  w.var(identity);
  w.var(verification_key);
  w.var(issuer_id);
  w.var(issuer_signature);
  return w.take();
}

Certificate Certificate::decode(BytesView b) {
  ByteReader r(b);
  if (r.u8() != 0x02) throw Error("decode failure: certificate tag");
  Certificate c;
  c.identity = r.var_str();
  c.verification_key = r.var();
  c.issuer_id = r.var_str();
  c.issuer_signature = r.var();
  r.expect_done();
  return c;
}

Certificate issue_cert(const SigningKeyPair& issuer, const std::string& issuer_id,
                       const std::string& identity, BytesView subject_vk) {
  Certificate c;
  c.identity = identity;
  c.verification_key = Bytes(subject_vk.begin(), subject_vk.end());
  c.issuer_id = issuer_id;
  c.issuer_signature = sign(issuer, c.signed_body());
  return c;
}

bool verify_cert_chain(BytesView root_vk, std::span<const Certificate> chain) noexcept {
  if (chain.empty()) return false;
  Bytes issuer_vk(root_vk.begin(), root_vk.end());
  for (const Certificate& cert : chain) {
    if (!verify(issuer_vk, cert.signed_body(), cert.issuer_signature)) return false;
    issuer_vk = cert.verification_key;
  }
  return true;
}

Bytes SignedMessage::encode() const {
  ByteWriter w;
  w.u8(0x03);  // structure tag: signed message
  w.var(body);
  w.var(signature);
  w.var(signer_cert.encode());
  return w.take();
}

SignedMessage SignedMessage::decode(BytesView b) {
  ByteReader r(b);
  if (r.u8() != 0x03) throw Error("decode failure: signed message tag");
  SignedMessage m;
  m.body = r.var();
  m.signature = r.var();
  m.signer_cert = Certificate::decode(r.var());
  r.expect_done();
  return m;
}

SignedMessage sign_message(const SigningKeyPair& key, Certificate cert, Bytes body) {
  SignedMessage m;
  m.signature = sign(key, body);
  m.body = std::move(body);
  m.signer_cert = std::move(cert);
  return m;
}

KemKeyPair KemKeyPair::generate() {
  init();
  KemKeyPair kp;
  kp.pk.resize(crypto_box_PUBLICKEYBYTES);
  kp.sk.resize(crypto_box_SECRETKEYBYTES);
  crypto_box_keypair(kp.pk.data(), kp.sk.data());
  return kp;
}

Bytes kem_seal(BytesView recipient_pk, BytesView plaintext) {
  init();
  if (recipient_pk.size() != crypto_box_PUBLICKEYBYTES)
    throw Error("decode failure: KEM public key size");
  Bytes out(plaintext.size() + crypto_box_SEALBYTES);
  crypto_box_seal(out.data(), plaintext.data(), plaintext.size(), recipient_pk.data());
  return out;
}

Bytes kem_open(BytesView pk, BytesView sk, BytesView box) {
  init();
  if (pk.size() != crypto_box_PUBLICKEYBYTES || sk.size() != crypto_box_SECRETKEYBYTES ||
      box.size() < crypto_box_SEALBYTES)
    throw Error("decode failure: KEM input size");
  Bytes out(box.size() - crypto_box_SEALBYTES);
  if (crypto_box_seal_open(out.data(), box.data(), box.size(), pk.data(), sk.data()) != 0)
    throw Error("decode failure: KEM box does not open");
  return out;
}

EphemeralKeyPair EphemeralKeyPair::generate() {
  init();
  EphemeralKeyPair kp;
  kp.sk = random_bytes(crypto_scalarmult_SCALARBYTES);
  kp.pk.resize(crypto_scalarmult_BYTES);
  crypto_scalarmult_base(kp.pk.data(), kp.sk.data());
  return kp;
}

SymmetricKey derive_channel_key(const EphemeralKeyPair& mine, BytesView their_pk) {
  init();
  if (their_pk.size() != crypto_scalarmult_BYTES)
    throw Error("decode failure: ephemeral public key size");
  Bytes shared(crypto_scalarmult_BYTES);
  if (crypto_scalarmult(shared.data(), mine.sk.data(), their_pk.data()) != 0)
    throw Error("decode failure: degenerate ephemeral key");
  // Order the public halves so both sides derive identical bytes.
  BytesView lo = mine.pk, hi = their_pk;
  if (std::memcmp(lo.data(), hi.data(), crypto_scalarmult_BYTES) > 0) std::swap(lo, hi);
  ByteWriter w;
  w.raw(shared).raw(lo).raw(hi);
  Bytes digest = sha256(w.take());
  return SymmetricKey::from_bytes(digest);
}

}  // namespace latteo::crypto
