// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_LINALG_HPP_
#define FROBMOD_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "frobmod/modarith.hpp"

namespace frobmod {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  static Matrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  Residue& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const Residue* data() const { return a_.data(); }
  bool is_zero() const;

  std::vector<Residue> apply(const std::vector<Residue>& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Residue s) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<Residue> a_;
};

std::size_t rank(Matrix m);

/// One solution of A x = b with all free variables zero, or nullopt.
std::optional<std::vector<Residue>> solve(const Matrix& a, const std::vector<Residue>& b);

}  // namespace frobmod

#endif  // FROBMOD_LINALG_HPP_
