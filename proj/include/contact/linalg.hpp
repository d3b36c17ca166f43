#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "contact/exact_poly.hpp"

namespace contact {

// Dense exact matrix, row-major. Small sizes only (m x m transforms, linear
// parts of charts, tangency systems).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix a);

// Column indices of the pivots of the row echelon form, in increasing order.
std::vector<std::size_t> pivot_columns(RationalMatrix a);

std::optional<RationalMatrix> inverse(const RationalMatrix& a);

// Some solution of a*x = rhs (free variables set to zero), or nullopt when
// the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& rhs);

}  // namespace contact
