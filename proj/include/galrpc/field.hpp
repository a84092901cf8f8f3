#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "galrpc/errors.hpp"
#include "galrpc/rng.hpp"

namespace galrpc {

// Largest extension degree this artifact supports. Keeping elements in a
// fixed-size inline array makes them trivially copyable and keeps matrices
// contiguous.
inline constexpr unsigned kMaxExtensionDegree = 64;

// Element of F_{q^m} = F_q[X]/(f), stored as its coefficient vector:
// c[i] is the coefficient of X^i, reduced into {0,...,q-1}. Entries at
// index >= m are always zero, so comparison needs no field context.
struct FFElem {
  std::array<std::uint8_t, kMaxExtensionDegree> c{};
  friend auto operator<=>(const FFElem&, const FFElem&) = default;
};

// Arithmetic context for F_{q^m}: q prime (q <= 251 so a coefficient fits
// one byte), 1 <= m <= 64, and a monic irreducible modulus of degree m.
// Immutable after construction; all operations are pure.
//
// Not constant time anywhere. This is a research artifact; do not use it
// to protect real secrets.
class Field {
 public:
  // Validates q prime, 1 <= m <= 64, modulus monic of degree exactly m with
  // reduced coefficients, and irreducibility (gcd(X^{q^i} - X, f) = 1 for
  // all i <= m/2). Throws ParamError on violation.
  Field(unsigned q, unsigned m, std::vector<std::uint8_t> modulus);

  // The default modulus for (q, m): the lexicographically smallest monic
  // irreducible polynomial of degree m, scanning the non-leading coefficient
  // vector (c_0,...,c_{m-1}) as a little-endian base-q counter. Deterministic,
  // so independently built binaries agree byte for byte.
  static Field with_default_modulus(unsigned q, unsigned m);
  static std::shared_ptr<const Field> make(unsigned q, unsigned m);
  static std::shared_ptr<const Field> make(unsigned q, unsigned m,
                                           std::vector<std::uint8_t> modulus);
  // F_q itself, realized as the degree-1 extension with modulus X.
  static std::shared_ptr<const Field> prime(unsigned q);

  unsigned q() const { return q_; }
  unsigned m() const { return m_; }
  const std::vector<std::uint8_t>& modulus() const { return mod_; }

  FFElem zero() const { return {}; }
  FFElem one() const;
  FFElem gen() const;  // X mod f

  // Builds an element from the low coefficients (length <= m, entries < q).
  FFElem from_coeffs(std::span<const std::uint8_t> coeffs) const;

  bool is_zero(const FFElem& a) const { return a == FFElem{}; }
  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  // Multiplication by a base-field scalar s in {0,...,q-1}.
  FFElem scale(std::uint8_t s, const FFElem& a) const;
  // Extended Euclidean inverse; throws DivideByZeroError on zero.
  FFElem inv(const FFElem& a) const;

  FFElem sample(Rng& rng) const;

  // One byte per coefficient, m bytes, index order i = 0..m-1.
  std::vector<std::uint8_t> to_bytes(const FFElem& a) const;
  FFElem from_bytes(std::span<const std::uint8_t> bytes) const;

  // Text form "q=<int>,m=<int>,mod=<c_0>,<c_1>,...,<c_m>".
  std::string to_text() const;
  static Field from_text(const std::string& text);

  // Coefficients as digits when q <= 10, else space-separated integers.
  std::string elem_to_string(const FFElem& a) const;

  // Membership validation: rejects elements whose representation cannot
  // belong to this field (unreduced coefficient, or support beyond m).
  void check(const FFElem& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.q_ == b.q_ && a.m_ == b.m_ && a.mod_ == b.mod_;
  }

 private:
  unsigned q_ = 0;
  unsigned m_ = 0;
  std::vector<std::uint8_t> mod_;       // m+1 coefficients, mod_[m] == 1
  std::vector<std::uint8_t> base_inv_;  // F_q inverse table, [1..q-1]
};

}  // namespace galrpc
