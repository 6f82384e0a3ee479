// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace frobmod {

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Residue x) { return x == 0; });
}

std::vector<Residue> Matrix::apply(const std::vector<Residue>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + static_cast<std::uint64_t>(at(r, c)) * v[c]) % p_;
    }
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix m(rows_, o.cols_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Residue x = at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        m.at(r, c) = add_mod(m.at(r, c), mul_mod(x, o.at(k, c), p_), p_);
      }
    }
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = add_mod(a_[i], o.a_[i], p_);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = sub_mod(a_[i], o.a_[i], p_);
  return m;
}

Matrix Matrix::scaled(Residue s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = mul_mod(x, s, p_);
  return m;
}

namespace {

// Gauss-Jordan on an augmented matrix; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce_rows(Matrix& m, std::size_t ncols) {
  const std::uint32_t p = m.prime();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    }
    Residue inv = inv_mod(m.at(row, col), p);
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(row, c) = mul_mod(m.at(row, c), inv, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Residue f = m.at(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.at(r, c) = sub_mod(m.at(r, c), mul_mod(f, m.at(row, c), p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) { return reduce_rows(m, m.cols()).size(); }

std::optional<std::vector<Residue>> solve(const Matrix& a, const std::vector<Residue>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1, a.prime());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r] % a.prime();
  }
  auto pivots = reduce_rows(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug.at(r, a.cols()) != 0) return std::nullopt;
  }
  std::vector<Residue> x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

}  // namespace frobmod
