#include <doctest.h>

#include <algorithm>

#include "galrpc/algebra.hpp"
#include "oracles.hpp"

using namespace galrpc;

namespace {

GroupAlgebra make_ctx(unsigned q, unsigned m,
                      const std::shared_ptr<const Group>& g) {
  return GroupAlgebra(Field::make(q, m), g);
}

}  // namespace

TEST_CASE("addition") {
  GroupAlgebra ctx = make_ctx(2, 5, Group::dihedral(3));
  Rng rng = seeded_rng(21);
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement a = ctx.sample(rng);
    CHECK(a + ctx.zero() == a);
    CHECK((a + a).is_zero());  // characteristic 2
  }
  const AlgebraElement sum = ctx.basis(2) + ctx.basis(3);
  for (unsigned i = 0; i < ctx.order(); ++i) {
    const bool expect_one = (i == 2 || i == 3);
    CHECK(sum.coord(i) == (expect_one ? ctx.field().one() : FFElem{}));
  }
}

TEST_CASE("multiplication identities and basis products") {
  GroupAlgebra ctx = make_ctx(2, 5, Group::dihedral(3));
  Rng rng = seeded_rng(22);
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement a = ctx.sample(rng);
    CHECK(ctx.one() * a == a);
    CHECK(a * ctx.one() == a);
  }
  const Group& g = ctx.group();
  for (unsigned i = 0; i < g.order(); ++i)
    for (unsigned j = 0; j < g.order(); ++j)
      CHECK(ctx.basis(i) * ctx.basis(j) == ctx.basis(g.mul(i, j)));
}

TEST_CASE("multiplication on a cyclic group is cyclic convolution") {
  GroupAlgebra ctx = make_ctx(2, 7, Group::cyclic(6));
  Rng rng = seeded_rng(23);
  for (int i = 0; i < 25; ++i) {
    const AlgebraElement a = ctx.sample(rng);
    const AlgebraElement b = ctx.sample(rng);
    const auto conv =
        oracles::cyclic_convolution(ctx.field(), a.coords(), b.coords());
    CHECK((a * b).coords() == conv);
  }
}

TEST_CASE("left ideal matrix") {
  GroupAlgebra ctx = make_ctx(2, 7, Group::dihedral(4));
  CHECK(lim(ctx.one()) == Matrix::identity(ctx.field_ptr(), ctx.order()));

  Rng rng = seeded_rng(24);
  for (int i = 0; i < 25; ++i) {
    const AlgebraElement u = ctx.sample(rng);
    const AlgebraElement v = ctx.sample(rng);
    // Vector-matrix identity: coords(uv) = coords(u) * lim(v).
    CHECK((u * v).coords() == row_times_matrix(u.coords(), lim(v)));
    // Homomorphism: lim(uv) = lim(u) lim(v).
    CHECK(lim(u * v) == mat_mul(lim(u), lim(v)));
    // Row 1 is the element itself; every row permutes the coordinates.
    const Matrix l = lim(u);
    std::vector<FFElem> sorted_coords = u.coords();
    std::sort(sorted_coords.begin(), sorted_coords.end());
    for (unsigned r = 0; r < ctx.order(); ++r) {
      std::vector<FFElem> row(l.row(r).begin(), l.row(r).end());
      if (r == 0) CHECK(row == u.coords());
      std::sort(row.begin(), row.end());
      CHECK(row == sorted_coords);
    }
  }

  // On a cyclic group the rows are cyclic shifts.
  GroupAlgebra cyc = make_ctx(2, 5, Group::cyclic(5));
  const AlgebraElement a = cyc.sample(rng);
  const Matrix l = lim(a);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j)
      CHECK(l.at(i, (i + j) % 5) == a.coord(j));
}

TEST_CASE("ring axioms on random triples") {
  for (auto group : {Group::dihedral(4), Group::cyclic(8)}) {
    GroupAlgebra ctx = make_ctx(2, 11, group);
    Rng rng = seeded_rng(25);
    for (int i = 0; i < 60; ++i) {
      const AlgebraElement a = ctx.sample(rng);
      const AlgebraElement b = ctx.sample(rng);
      const AlgebraElement c = ctx.sample(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("non-commutativity witness on dihedral groups") {
  GroupAlgebra ctx = make_ctx(2, 5, Group::dihedral(5));
  const AlgebraElement r = ctx.basis(1);
  const AlgebraElement s = ctx.basis(5);
  CHECK_FALSE(r * s == s * r);
}

TEST_CASE("invertibility") {
  GroupAlgebra ctx = make_ctx(2, 5, Group::dihedral(3));
  CHECK(ga_is_invertible(ctx.one()));
  CHECK_FALSE(ga_is_invertible(ctx.zero()));

  // q=2, |G| even: the all-ones element squares to |G| * itself = 0.
  std::vector<FFElem> ones(ctx.order(), ctx.field().one());
  const AlgebraElement all = ctx.from_coords(ones);
  CHECK((all * all).is_zero());
  CHECK_FALSE(ga_is_invertible(all));
}

TEST_CASE("inverse") {
  GroupAlgebra ctx = make_ctx(2, 7, Group::dihedral(4));
  CHECK(*ga_inverse(ctx.one()) == ctx.one());
  for (unsigned i = 0; i < ctx.order(); ++i)
    CHECK(*ga_inverse(ctx.basis(i)) == ctx.basis(ctx.group().inv(i)));

  Rng rng = seeded_rng(26);
  int verified = 0;
  while (verified < 20) {
    const AlgebraElement a = ctx.sample(rng);
    auto inv = ga_inverse(a);
    if (!inv) {
      CHECK_FALSE(ga_is_invertible(a));
      continue;
    }
    CHECK(ga_is_invertible(a));
    CHECK(a * *inv == ctx.one());
    CHECK(*inv * a == ctx.one());
    ++verified;
  }
  CHECK_FALSE(ga_inverse(ctx.zero()).has_value());
}

TEST_CASE("invertibility criterion, exhaustive over F_4[C_2]") {
  GroupAlgebra ctx = make_ctx(2, 2, Group::cyclic(2));
  const auto all = oracles::all_algebra_elements(ctx);
  REQUIRE(all.size() == 16);
  unsigned units = 0;
  for (const AlgebraElement& a : all) {
    bool has_inverse = false;
    for (const AlgebraElement& b : all)
      if (a * b == ctx.one()) {
        has_inverse = true;
        break;
      }
    CHECK(ga_is_invertible(a) == has_inverse);
    units += has_inverse;
  }
  CHECK(units == 12);
}

TEST_CASE("parallel product matches the serial reference") {
  // dihedral(32) with m=16 crosses the parallel cutoff.
  for (auto group : {Group::dihedral(3), Group::dihedral(32)}) {
    GroupAlgebra ctx = make_ctx(2, 16, group);
    Rng rng = seeded_rng(27);
    for (int i = 0; i < 10; ++i) {
      const AlgebraElement a = ctx.sample(rng);
      const AlgebraElement b = ctx.sample(rng);
      CHECK(a * b == serial::ga_mul(a, b));
    }
  }
}

TEST_CASE("coordinate support") {
  GroupAlgebra ctx = make_ctx(2, 9, Group::dihedral(3));
  CHECK(coordinate_support(ctx.zero()).dim() == 0);
  CHECK(coordinate_support(ctx.one()).dim() == 1);
  Rng rng = seeded_rng(28);
  const Subspace s = sample_subspace(ctx.field_ptr(), 3, rng);
  const AlgebraElement a = ctx.sample_in(s, rng);
  for (const FFElem& c : a.coords()) CHECK(s.contains(c));
  CHECK(coordinate_support(a).dim() <= 3);
}

TEST_CASE("byte form round trip") {
  GroupAlgebra ctx = make_ctx(3, 4, Group::dihedral(3));
  Rng rng = seeded_rng(29);
  for (int i = 0; i < 10; ++i) {
    const AlgebraElement a = ctx.sample(rng);
    const auto bytes = ga_to_bytes(a);
    CHECK(bytes.size() == ctx.order() * ctx.field().m());
    CHECK(ga_from_bytes(ctx, bytes) == a);
  }
  std::vector<std::uint8_t> short_bytes(5, 0);
  CHECK_THROWS_AS((void)ga_from_bytes(ctx, short_bytes), FormatError);
}

TEST_CASE("context mismatches are rejected") {
  GroupAlgebra a_ctx = make_ctx(2, 5, Group::dihedral(3));
  GroupAlgebra b_ctx = make_ctx(2, 5, Group::cyclic(6));
  GroupAlgebra c_ctx = make_ctx(2, 7, Group::dihedral(3));
  CHECK_THROWS_AS((void)(a_ctx.zero() + b_ctx.zero()), ParamError);
  CHECK_THROWS_AS((void)(a_ctx.zero() * c_ctx.zero()), ParamError);
  CHECK_THROWS_AS((void)a_ctx.from_coords(std::vector<FFElem>(5)), ParamError);
}
