#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "galrpc/field.hpp"

namespace galrpc {

// Dense row-major matrix over one field context. The same type serves both
// F_{q^m} matrices (parity checks, left ideal matrices) and F_q coefficient
// matrices (subspace bases, via the degree-1 prime field), so a single
// elimination kernel covers every rank computation in the artifact.
class Matrix {
 public:
  Matrix(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols);
  static Matrix identity(std::shared_ptr<const Field> field, std::size_t n);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FFElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FFElem& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<FFElem> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const FFElem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return *a.field_ == *b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  std::shared_ptr<const Field> field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FFElem> data_;
};

struct RrefResult {
  Matrix rref;
  std::size_t rank;
  Matrix transform;  // invertible, transform * input = rref
};

// Gauss-Jordan reduced row echelon form. The per-pivot elimination loop runs
// under OpenMP once the matrix is large enough; serial::rref is the plain
// reference used to cross-check it.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix hstack(const Matrix& a, const Matrix& b);
std::vector<FFElem> row_times_matrix(std::span<const FFElem> u, const Matrix& m);

// Solves z * A = b (row convention). Returns a particular solution with all
// free variables zero, or nullopt when the system is inconsistent.
std::optional<std::vector<FFElem>> solve_left(const Matrix& a,
                                              std::span<const FFElem> b);

// Two-sided inverse, or nullopt when singular. Non-square input is a
// parameter error.
std::optional<Matrix> matrix_inverse(const Matrix& a);

// Basis of {v : M v^T = 0} as rows of a (cols - rank) x cols matrix.
Matrix right_kernel(const Matrix& m);

namespace serial {
// Reference implementations without OpenMP, kept for testing and for the
// kernel benchmark.
RrefResult rref(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
}  // namespace serial

}  // namespace galrpc
