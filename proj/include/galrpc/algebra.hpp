#pragma once

#include <memory>
#include <optional>

#include "galrpc/group.hpp"
#include "galrpc/linalg.hpp"
#include "galrpc/subspace.hpp"

namespace galrpc {

class AlgebraElement;

// The group algebra F_{q^m}G in coordinates: an element is the length-n
// vector (u_1,...,u_n) attached to the fixed ordering g_1,...,g_n, i.e. the
// preimage of sum u_i g_i under the coordinate identification. Addition is
// componentwise; multiplication extends the group law bilinearly.
class GroupAlgebra {
 public:
  GroupAlgebra(std::shared_ptr<const Field> field,
               std::shared_ptr<const Group> group);

  const Field& field() const { return *field_; }
  const Group& group() const { return *group_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  unsigned order() const { return group_->order(); }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(unsigned i) const;  // the element g_i
  AlgebraElement from_coords(std::vector<FFElem> coords) const;

  AlgebraElement sample(Rng& rng) const;
  // Every coordinate drawn uniformly from the given subspace of F_{q^m}.
  AlgebraElement sample_in(const Subspace& support, Rng& rng) const;

  friend bool operator==(const GroupAlgebra& a, const GroupAlgebra& b) {
    return *a.field_ == *b.field_ && *a.group_ == *b.group_;
  }

 private:
  std::shared_ptr<const Field> field_;
  std::shared_ptr<const Group> group_;
};

class AlgebraElement {
 public:
  AlgebraElement(GroupAlgebra ctx, std::vector<FFElem> coords);

  const GroupAlgebra& ctx() const { return ctx_; }
  const std::vector<FFElem>& coords() const { return coords_; }
  const FFElem& coord(unsigned i) const { return coords_[i]; }
  bool is_zero() const;

  friend AlgebraElement operator+(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a,
                                  const AlgebraElement& b);
  // Group algebra product a b = sum_g (sum_h a_h b_{h^-1 g}) g, computed by
  // the direct double sum (O(n^2) field products). The loop over output
  // coordinates is independent, so it parallelizes; serial::ga_mul is the
  // reference path.
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  GroupAlgebra ctx_;
  std::vector<FFElem> coords_;
};

// The left ideal matrix of a: n x n with row i the coordinates of g_i * a.
// Built from n group translations, not n algebra products, so the
// homomorphism property lim(ab) = lim(a) lim(b) is a genuine cross-check.
Matrix lim(const AlgebraElement& a);

// a is invertible iff lim(a) has full rank.
bool ga_is_invertible(const AlgebraElement& a);

// Solves z * lim(a) = coords(1); verifies the two-sided identity before
// returning. Nullopt when lim(a) is singular.
std::optional<AlgebraElement> ga_inverse(const AlgebraElement& a);

// F_q-span of the coordinates (the rank support of the coordinate vector).
Subspace coordinate_support(const AlgebraElement& a);

// Coordinate-major byte form: n blocks of m coefficient bytes.
std::vector<std::uint8_t> ga_to_bytes(const AlgebraElement& a);
AlgebraElement ga_from_bytes(const GroupAlgebra& ctx,
                             std::span<const std::uint8_t> bytes);

namespace serial {
AlgebraElement ga_mul(const AlgebraElement& a, const AlgebraElement& b);
}

}  // namespace galrpc
