#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lpa/field.hpp"

namespace lpa {

/// Dense matrix over the session field. Elimination pivots on the first
/// nonzero entry of each column (exact arithmetic, so there is no numerical
/// pivoting), which keeps every factorization deterministic.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols),
        a_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend bool operator==(const Matrix&, const Matrix&);
  Matrix pow(unsigned k) const;  // square; k >= 0, pow(0) = identity

  std::size_t rank() const;

  /// Row-reduce to RREF; returns the reduced matrix and records the row
  /// transform T (T * this = rref) and its inverse when requested.
  Matrix rref(Matrix* transform = nullptr,
              Matrix* transform_inv = nullptr,
              std::vector<std::size_t>* pivot_cols = nullptr) const;

  std::optional<Matrix> inverse() const;

  /// One solution x of (this) x = b, if the system is consistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

  /// Basis of the right kernel, as columns.
  std::vector<std::vector<Scalar>> kernel_basis() const;

  /// Indices of a maximal independent set of columns (the pivot columns).
  std::vector<std::size_t> column_space_basis() const;

  /// A = U D V with U, V invertible and D = diag(1,...,1,0,...,0) carrying
  /// rank(A) ones. Requires a square matrix.
  struct RankFactorization;
  RankFactorization rank_factorize() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct Matrix::RankFactorization {
  std::size_t rank;
  Matrix u, u_inv, v, v_inv;
};

}  // namespace lpa
