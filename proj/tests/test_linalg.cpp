#include <doctest.h>

#include "galrpc/linalg.hpp"
#include "oracles.hpp"

using namespace galrpc;

namespace {

Matrix random_matrix(const std::shared_ptr<const Field>& f, std::size_t rows,
                     std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f->sample(rng);
  return m;
}

Matrix random_invertible(const std::shared_ptr<const Field>& f, std::size_t n,
                         Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

bool is_rref(const Matrix& m, std::size_t rnk) {
  const Field& f = m.field();
  std::size_t last_pivot = 0;
  bool first = true;
  for (std::size_t r = 0; r < rnk; ++r) {
    std::size_t c = 0;
    while (c < m.cols() && f.is_zero(m.at(r, c))) ++c;
    if (c == m.cols()) return false;
    if (!(m.at(r, c) == f.one())) return false;
    if (!first && c <= last_pivot) return false;
    for (std::size_t r2 = 0; r2 < m.rows(); ++r2)
      if (r2 != r && !f.is_zero(m.at(r2, c))) return false;
    last_pivot = c;
    first = false;
  }
  for (std::size_t r = rnk; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!f.is_zero(m.at(r, c))) return false;
  return true;
}

}  // namespace

TEST_CASE("rref on identity and zero") {
  auto f = Field::make(2, 4);
  const Matrix id = Matrix::identity(f, 5);
  RrefResult r = rref(id);
  CHECK(r.rref == id);
  CHECK(r.rank == 5);
  CHECK(r.transform == id);

  const Matrix z(f, 3, 4);
  RrefResult rz = rref(z);
  CHECK(rz.rref == z);
  CHECK(rz.rank == 0);
  CHECK(rz.transform == Matrix::identity(f, 3));
}

TEST_CASE("rank agrees with the row-span enumeration oracle over F_2") {
  auto f2 = Field::prime(2);
  Rng rng = seeded_rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_matrix(f2, 4, 6, rng);
    const std::size_t span = oracles::f2_row_span_size(m);
    CHECK((1ULL << rank(m)) == span);
  }
}

TEST_CASE("rref properties on random matrices") {
  auto f = Field::make(3, 3);
  Rng rng = seeded_rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix m = random_matrix(f, 5, 7, rng);
    RrefResult r = rref(m);
    CHECK(is_rref(r.rref, r.rank));
    CHECK(mat_mul(r.transform, m) == r.rref);  // transform exactness
    CHECK(rref(r.rref).rref == r.rref);        // idempotence
    CHECK(rank(r.transform) == m.rows());      // transform invertible
  }
}

TEST_CASE("solve_left") {
  auto f = Field::make(2, 3);
  Rng rng = seeded_rng(5);

  const Matrix id = Matrix::identity(f, 4);
  std::vector<FFElem> b(4);
  for (auto& v : b) v = f->sample(rng);
  auto z = solve_left(id, b);
  REQUIRE(z.has_value());
  CHECK(*z == b);

  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_invertible(f, 5, rng);
    std::vector<FFElem> zz(5);
    for (auto& v : zz) v = f->sample(rng);
    const std::vector<FFElem> rhs = row_times_matrix(zz, a);
    auto sol = solve_left(a, rhs);
    REQUIRE(sol.has_value());
    CHECK(*sol == zz);
  }

  // Repeated row, b outside the row space.
  Matrix a(f, 2, 2);
  a.at(0, 0) = f->one();
  a.at(0, 1) = f->gen();
  a.at(1, 0) = f->one();
  a.at(1, 1) = f->gen();
  std::vector<FFElem> outside{f->one(), f->zero()};
  CHECK_FALSE(solve_left(a, outside).has_value());

  std::vector<FFElem> wrong_len(3);
  CHECK_THROWS_AS((void)solve_left(a, wrong_len), ParamError);
}

TEST_CASE("matrix_inverse") {
  auto f = Field::make(2, 5);
  Rng rng = seeded_rng(6);
  const Matrix id = Matrix::identity(f, 4);
  CHECK(*matrix_inverse(id) == id);

  for (int trial = 0; trial < 15; ++trial) {
    const Matrix a = random_invertible(f, 6, rng);
    auto inv = matrix_inverse(a);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(a, *inv) == Matrix::identity(f, 6));
    CHECK(mat_mul(*inv, a) == Matrix::identity(f, 6));
    CHECK(*matrix_inverse(*inv) == a);
  }

  Matrix sing(f, 3, 3);  // zero row
  sing.at(0, 0) = f->one();
  sing.at(1, 1) = f->one();
  CHECK_FALSE(matrix_inverse(sing).has_value());

  const Matrix rect(f, 2, 3);
  CHECK_THROWS_AS((void)matrix_inverse(rect), ParamError);
}

TEST_CASE("right_kernel annihilates and has the right dimension") {
  auto f = Field::make(2, 4);
  Rng rng = seeded_rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(f, 4, 7, rng);
    const Matrix k = right_kernel(m);
    CHECK(k.rows() == 7 - rank(m));
    CHECK(rank(k) == k.rows());
    for (std::size_t r = 0; r < k.rows(); ++r) {
      // m * v^T = 0 for every kernel row v
      for (std::size_t i = 0; i < m.rows(); ++i) {
        FFElem acc;
        for (std::size_t j = 0; j < m.cols(); ++j)
          acc = f->add(acc, f->mul(m.at(i, j), k.at(r, j)));
        CHECK(f->is_zero(acc));
      }
    }
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  Rng rng = seeded_rng(8);
  for (auto [q, m] : {std::pair{2u, 8u}, {3u, 5u}}) {
    auto f = Field::make(q, m);
    // 40x40 crosses the parallel cutoff, 6x6 stays below it.
    for (std::size_t n : {6u, 40u}) {
      const Matrix a = random_matrix(f, n, n, rng);
      const Matrix b = random_matrix(f, n, n, rng);
      CHECK(mat_mul(a, b) == serial::mat_mul(a, b));
      const RrefResult lhs = rref(a);
      const RrefResult rhs = serial::rref(a);
      CHECK(lhs.rref == rhs.rref);
      CHECK(lhs.rank == rhs.rank);
      CHECK(lhs.transform == rhs.transform);
    }
  }
}

TEST_CASE("dimension and field mismatches are rejected") {
  auto f2 = Field::make(2, 3);
  auto f3 = Field::make(3, 3);
  const Matrix a(f2, 2, 3);
  const Matrix b(f2, 2, 3);
  const Matrix c(f3, 3, 2);
  CHECK_THROWS_AS((void)mat_mul(a, b), ParamError);
  CHECK_THROWS_AS((void)mat_mul(a, c), ParamError);
  CHECK_THROWS_AS((void)hstack(a, c), ParamError);
}
