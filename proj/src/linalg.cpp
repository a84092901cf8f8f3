#include "galrpc/linalg.hpp"

#include <cstdint>

namespace galrpc {
namespace {

// Below this many cells a parallel region costs more than it saves.
constexpr std::size_t kOmpEliminationCutoff = 4096;
constexpr std::size_t kOmpMulCutoff = 32768;

void check_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field()))
    throw ParamError(std::string(op) + ": operands from different fields");
}

// In-place Gauss-Jordan; mirrors the row operations onto *t when given.
// Returns the rank.
std::size_t echelonize(Matrix& m, Matrix* t) {
  const Field& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t piv = 0;
  for (std::size_t col = 0; col < cols && piv < rows; ++col) {
    std::size_t p = piv;
    while (p < rows && f.is_zero(m.at(p, col))) ++p;
    if (p == rows) continue;
    if (p != piv) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(p, c), m.at(piv, c));
      if (t)
        for (std::size_t c = 0; c < t->cols(); ++c)
          std::swap(t->at(p, c), t->at(piv, c));
    }
    if (!(m.at(piv, col) == f.one())) {
      const FFElem s = f.inv(m.at(piv, col));
      for (std::size_t c = col; c < cols; ++c)
        m.at(piv, c) = f.mul(s, m.at(piv, c));
      if (t)
        for (std::size_t c = 0; c < t->cols(); ++c)
          t->at(piv, c) = f.mul(s, t->at(piv, c));
    }
#pragma omp parallel for schedule(static) \
    if (rows * cols >= kOmpEliminationCutoff)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(rows); ++r) {
      if (static_cast<std::size_t>(r) == piv) continue;
      const FFElem fac = m.at(r, col);
      if (f.is_zero(fac)) continue;
      for (std::size_t c = col; c < cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(fac, m.at(piv, c)));
      if (t)
        for (std::size_t c = 0; c < t->cols(); ++c)
          t->at(r, c) = f.sub(t->at(r, c), f.mul(fac, t->at(piv, c)));
    }
    ++piv;
  }
  return piv;
}

}  // namespace

Matrix::Matrix(std::shared_ptr<const Field> field, std::size_t rows,
               std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::shared_ptr<const Field> field, std::size_t n) {
  Matrix m(field, n, n);
  const FFElem one = field->one();
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  Matrix t = Matrix::identity(m.field_ptr(), m.rows());
  const std::size_t rank = echelonize(r, &t);
  return {std::move(r), rank, std::move(t)};
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return echelonize(r, nullptr);
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_same_field(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw ParamError("mat_mul: dimension mismatch");
  const Field& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  const std::size_t inner = a.cols();
#pragma omp parallel for schedule(static) \
    if (a.rows() * b.cols() * inner >= kOmpMulCutoff)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(a.rows()); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const FFElem& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field_ptr(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  check_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) throw ParamError("hstack: row count mismatch");
  Matrix out(a.field_ptr(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

std::vector<FFElem> row_times_matrix(std::span<const FFElem> u,
                                     const Matrix& m) {
  if (u.size() != m.rows())
    throw ParamError("row_times_matrix: dimension mismatch");
  const Field& f = m.field();
  std::vector<FFElem> out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (f.is_zero(u[r])) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[c] = f.add(out[c], f.mul(u[r], m.at(r, c)));
  }
  return out;
}

std::optional<std::vector<FFElem>> solve_left(const Matrix& a,
                                              std::span<const FFElem> b) {
  if (b.size() != a.cols()) throw ParamError("solve_left: dimension mismatch");
  const Field& f = a.field();
  // z A = b  <=>  A^T z^T = b^T; reduce A^T and apply the same transform to b.
  const Matrix at = transpose(a);
  RrefResult res = rref(at);
  std::vector<FFElem> tb(at.rows());
  for (std::size_t i = 0; i < at.rows(); ++i) {
    FFElem acc;
    for (std::size_t j = 0; j < at.rows(); ++j)
      acc = f.add(acc, f.mul(res.transform.at(i, j), b[j]));
    tb[i] = acc;
  }
  for (std::size_t i = res.rank; i < at.rows(); ++i) {
    if (!f.is_zero(tb[i])) return std::nullopt;  // inconsistent
  }
  std::vector<FFElem> z(a.rows());
  for (std::size_t p = 0; p < res.rank; ++p) {
    std::size_t c = 0;
    while (c < at.cols() && f.is_zero(res.rref.at(p, c))) ++c;
    z[c] = tb[p];  // free variables stay zero
  }
  return z;
}

std::optional<Matrix> matrix_inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ParamError("matrix_inverse: non-square matrix");
  RrefResult res = rref(a);
  if (res.rank != a.rows()) return std::nullopt;
  return res.transform;  // transform * a = I and a is square
}

Matrix right_kernel(const Matrix& m) {
  const Field& f = m.field();
  RrefResult res = rref(m);
  std::vector<std::size_t> pivot_col(res.rank);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p = 0; p < res.rank; ++p) {
    std::size_t c = 0;
    while (c < m.cols() && f.is_zero(res.rref.at(p, c))) ++c;
    pivot_col[p] = c;
    is_pivot[c] = true;
  }
  Matrix out(m.field_ptr(), m.cols() - res.rank, m.cols());
  std::size_t row = 0;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    out.at(row, fc) = f.one();
    for (std::size_t p = 0; p < res.rank; ++p)
      out.at(row, pivot_col[p]) = f.neg(res.rref.at(p, fc));
    ++row;
  }
  return out;
}

namespace serial {

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  Matrix t = Matrix::identity(m.field_ptr(), m.rows());
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::size_t piv = 0;
  for (std::size_t col = 0; col < cols && piv < rows; ++col) {
    std::size_t p = piv;
    while (p < rows && f.is_zero(r.at(p, col))) ++p;
    if (p == rows) continue;
    if (p != piv) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(r.at(p, c), r.at(piv, c));
      for (std::size_t c = 0; c < rows; ++c) std::swap(t.at(p, c), t.at(piv, c));
    }
    const FFElem s = f.inv(r.at(piv, col));
    for (std::size_t c = 0; c < cols; ++c) r.at(piv, c) = f.mul(s, r.at(piv, c));
    for (std::size_t c = 0; c < rows; ++c) t.at(piv, c) = f.mul(s, t.at(piv, c));
    for (std::size_t row = 0; row < rows; ++row) {
      if (row == piv) continue;
      const FFElem fac = r.at(row, col);
      if (f.is_zero(fac)) continue;
      for (std::size_t c = 0; c < cols; ++c)
        r.at(row, c) = f.sub(r.at(row, c), f.mul(fac, r.at(piv, c)));
      for (std::size_t c = 0; c < rows; ++c)
        t.at(row, c) = f.sub(t.at(row, c), f.mul(fac, t.at(piv, c)));
    }
    ++piv;
  }
  return {std::move(r), piv, std::move(t)};
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_same_field(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw ParamError("mat_mul: dimension mismatch");
  const Field& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FFElem acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = acc;
    }
  return out;
}

}  // namespace serial
}  // namespace galrpc
