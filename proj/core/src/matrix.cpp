#include "lpa/matrix.hpp"

#include <stdexcept>

namespace lpa {

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::pow(unsigned k) const {
  if (rows_ != cols_) throw std::invalid_argument("pow needs a square matrix");
  Matrix acc = identity(field_, rows_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Matrix Matrix::rref(Matrix* transform, Matrix* transform_inv,
                    std::vector<std::size_t>* pivot_cols) const {
  Matrix r = *this;
  Matrix t = identity(field_, rows_);
  Matrix tinv = identity(field_, rows_);
  std::size_t lead = 0;
  std::vector<std::size_t> pivots;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(r.at(i, c), r.at(j, c));
    for (std::size_t c = 0; c < rows_; ++c) std::swap(t.at(i, c), t.at(j, c));
    // inverse picks up the swap on columns
    for (std::size_t c = 0; c < rows_; ++c)
      std::swap(tinv.at(c, i), tinv.at(c, j));
  };
  auto row_scale = [&](std::size_t i, const Scalar& k) {
    for (std::size_t c = 0; c < cols_; ++c) r.at(i, c) *= k;
    for (std::size_t c = 0; c < rows_; ++c) t.at(i, c) *= k;
    Scalar kinv = k.inverse();
    for (std::size_t c = 0; c < rows_; ++c) tinv.at(c, i) *= kinv;
  };
  // row_i += k * row_j
  auto row_axpy = [&](std::size_t i, std::size_t j, const Scalar& k) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r.at(j, c).is_zero()) continue;
      r.at(i, c) += k * r.at(j, c);
    }
    for (std::size_t c = 0; c < rows_; ++c) {
      if (t.at(j, c).is_zero()) continue;
      t.at(i, c) += k * t.at(j, c);
    }
    // inverse picks up col_j -= k * col_i
    for (std::size_t c = 0; c < rows_; ++c) {
      if (tinv.at(c, i).is_zero()) continue;
      tinv.at(c, j) -= k * tinv.at(c, i);
    }
  };

  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    std::size_t piv = lead;
    while (piv < rows_ && r.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != lead) row_swap(piv, lead);
    if (!r.at(lead, col).is_one()) row_scale(lead, r.at(lead, col).inverse());
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead || r.at(i, col).is_zero()) continue;
      row_axpy(i, lead, -r.at(i, col));
    }
    pivots.push_back(col);
    ++lead;
  }
  if (transform) *transform = t;
  if (transform_inv) *transform_inv = tinv;
  if (pivot_cols) *pivot_cols = pivots;
  return r;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(nullptr, nullptr, &pivots);
  return pivots.size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix t(field_, 0, 0);
  std::vector<std::size_t> pivots;
  Matrix r = rref(&t, nullptr, &pivots);
  if (pivots.size() != rows_) return std::nullopt;
  return t;
}

std::optional<std::vector<Scalar>> Matrix::solve(
    const std::vector<Scalar>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("rhs size mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivots;
  Matrix r = aug.rref(nullptr, nullptr, &pivots);
  for (auto c : pivots)
    if (c == cols_) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(k, cols_);
  return x;
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  Matrix r = rref(nullptr, nullptr, &pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> Matrix::column_space_basis() const {
  std::vector<std::size_t> pivots;
  rref(nullptr, nullptr, &pivots);
  return pivots;
}

Matrix::RankFactorization Matrix::rank_factorize() const {
  if (rows_ != cols_)
    throw std::invalid_argument("rank_factorize needs a square matrix");
  const std::size_t n = rows_;
  Matrix t(field_, 0, 0), tinv(field_, 0, 0);
  std::vector<std::size_t> pivots;
  Matrix r = rref(&t, &tinv, &pivots);
  const std::size_t rk = pivots.size();

  // V: first rk rows are the nonzero rows of the RREF; the remaining rows
  // greedily extend them by standard basis vectors to an invertible matrix.
  Matrix v(field_, n, n);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < n; ++j) v.at(i, j) = r.at(i, j);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t fill = rk;
  for (std::size_t j = 0; j < n && fill < n; ++j) {
    if (is_pivot[j]) continue;  // e_j would collide with a pivot column
    v.at(fill, j) = Scalar::one(field_);
    ++fill;
  }
  auto vinv = v.inverse();
  if (!vinv) throw std::logic_error("rank factorization: V not invertible");

  RankFactorization rf{rk, tinv, t, v, *vinv};
  return rf;
}

}  // namespace lpa
