#include "contact/linalg.hpp"

#include <utility>

#include "contact/error.hpp"

namespace contact {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ContactError(ErrorCode::MismatchedVars, "matrix dimensions do not agree");
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns. `aug` rows are
// carried along with the same row operations when non-null.
std::vector<std::size_t> rref(RationalMatrix& a, RationalMatrix* aug) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      if (aug) for (std::size_t j = 0; j < aug->cols(); ++j) std::swap((*aug)(p, j), (*aug)(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    if (aug) for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      if (aug) for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(i, j) -= f * (*aug)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix a) { return rref(a, nullptr).size(); }

std::vector<std::size_t> pivot_columns(RationalMatrix a) { return rref(a, nullptr); }

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  RationalMatrix work = a;
  RationalMatrix inv = RationalMatrix::identity(a.rows());
  if (rref(work, &inv).size() != a.rows()) return std::nullopt;
  return inv;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& rhs) {
  if (rhs.size() != a.rows()) {
    throw ContactError(ErrorCode::MismatchedVars, "right-hand side has wrong length");
  }
  RationalMatrix work = a;
  RationalMatrix b(a.rows(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  const auto pivots = rref(work, &b);
  for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
    if (sgn(b(i, 0)) != 0) return std::nullopt;
  }
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b(i, 0);
  return x;
}

}  // namespace contact
