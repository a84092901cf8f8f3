#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "galrpc/linalg.hpp"

namespace galrpc {

// An F_q-subspace of F_{q^m}, held in canonical form: the basis is the RREF
// of the generators' coefficient rows, with zero rows dropped. Two Subspace
// values are equal iff they are the same set of field elements.
class Subspace {
 public:
  static Subspace zero(std::shared_ptr<const Field> ambient);
  static Subspace span(std::shared_ptr<const Field> ambient,
                       std::span<const FFElem> generators);

  unsigned dim() const { return static_cast<unsigned>(basis_.rows()); }
  const Field& ambient() const { return *ambient_; }
  const std::shared_ptr<const Field>& ambient_ptr() const { return ambient_; }

  // dim x m matrix over F_q in RREF, no zero rows.
  const Matrix& basis() const { return basis_; }
  // Basis rows read back as elements of the ambient field.
  std::vector<FFElem> basis_elements() const;

  bool contains(const FFElem& v) const;

  // Debug dump: one basis row per line, coefficients as digits.
  std::string to_text() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return *a.ambient_ == *b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::shared_ptr<const Field> ambient, Matrix basis);

  std::shared_ptr<const Field> ambient_;
  Matrix basis_;
};

// Zassenhaus intersection: one echelonization of the stacked block matrix.
Subspace intersect(const Subspace& s, const Subspace& t);

// {f*s : s in S}; f must be nonzero, and the dimension is preserved.
Subspace scalar_subspace(const FFElem& f, const Subspace& s);

// Span of all pairwise products of basis elements of E and F.
Subspace subspace_product(const Subspace& e, const Subspace& f);

// Uniform dim-dimensional subspace by rejection: sample dim x m matrices
// until full rank, then canonicalize. Every subspace is hit by the same
// number (|GL(dim, q)|) of full-rank matrices, so the result is uniform.
Subspace sample_subspace(std::shared_ptr<const Field> ambient, unsigned dim,
                         Rng& rng);

}  // namespace galrpc
