#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>

#include "galrpc/lrpc.hpp"

namespace galrpc {

// Group-algebra ROLLO-I. The shared key is the hash of the error support E;
// decapsulation recovers E with the rank-support-recovery decoder. Plain
// KEM, no implicit rejection: a decoding failure is reported as such.
struct KemParams {
  GroupAlgebra ctx;
  unsigned lambda = 0;  // secret support dimension
  unsigned r = 0;       // error support dimension
};

// Validates r*lambda <= min(m, n), lambda <= m and r <= n (each error part
// has to span E with its n coordinates).
KemParams make_kem_params(GroupAlgebra ctx, unsigned lambda, unsigned r);

struct PublicKey {
  KemParams params;
  AlgebraElement h;
};

struct SecretKey {
  KemParams params;
  AlgebraElement x;
  AlgebraElement y;
  Subspace support;  // F, cached so decapsulation is self-contained
};

struct Ciphertext {
  AlgebraElement c;
};

using SharedKey = std::array<std::uint8_t, 32>;

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
};

// F <- random lambda-dimensional subspace; x, y sampled from F until their
// joint coordinate span is exactly F and x is invertible; h = y x^-1.
// When diag is non-null and the group is cyclic or abelian, prints the
// structural-attack warning there (non-fatal).
KeyPair keygen(const KemParams& params, Rng& rng, std::ostream* diag = nullptr);

struct EncapResult {
  Ciphertext ct;
  SharedKey key;
};

// E <- random r-dimensional subspace; e1, e2 sampled from E, each spanning
// E; c = e1 + e2 h; key = hash_subspace(E).
EncapResult encap(const PublicKey& pk, Rng& rng);

// Instrumented variant exposing the sampled error for tests and harnesses.
struct TracedEncap {
  Ciphertext ct;
  SharedKey key;
  Subspace error_support;
  AlgebraElement e1;
  AlgebraElement e2;
};
TracedEncap encap_traced(const PublicKey& pk, Rng& rng);

// s = c x = e1 x + e2 y has support inside E*F; RSR on (F, s) recovers E.
// Nullopt on decoding failure.
std::optional<SharedKey> decap(const SecretKey& sk, const Ciphertext& ct);

// SHA-256 of "GA-LRPC-KEM-v1" || q || m || dim (4-byte big-endian each)
// || RREF basis rows, one byte per F_q coefficient. Canonical bases make
// equal subspaces hash equally.
SharedKey hash_subspace(const Subspace& e);

std::string to_hex(const SharedKey& key);

// Checks that sk reproduces pk: same parameters and y x^-1 = h.
bool validate_keypair(const PublicKey& pk, const SecretKey& sk);

// Binary formats: magic "GALR", version 1, a kind byte, field and group
// blocks, then the kind-specific payload. All integers big-endian.
std::vector<std::uint8_t> serialize(const PublicKey& pk);
std::vector<std::uint8_t> serialize(const SecretKey& sk);
std::vector<std::uint8_t> serialize(const Ciphertext& ct);
PublicKey parse_public_key(std::span<const std::uint8_t> bytes);
SecretKey parse_secret_key(std::span<const std::uint8_t> bytes);
Ciphertext parse_ciphertext(std::span<const std::uint8_t> bytes);

}  // namespace galrpc
