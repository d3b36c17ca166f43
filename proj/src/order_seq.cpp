#include "contact/order_seq.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "contact/error.hpp"

namespace contact {

OrderData order_sequence(const RestrictedSystem& sys) {
  OrderData od = order_sequence(sys.members);
  od.truncation = sys.truncation;
  return od;
}

OrderData order_sequence(const std::vector<Jet>& members) {
  const std::size_t m = members.size();
  if (m == 0) throw ContactError(ErrorCode::InvalidInput, "empty linear system");
  const unsigned truncation = members.front().truncation();
  for (const auto& j : members) {
    if (j.num_vars() != members.front().num_vars()) {
      throw ContactError(ErrorCode::MismatchedVars, "members live in different rings");
    }
  }

  std::set<Exponents, GrlexLess> support;
  for (const auto& j : members)
    for (const auto& [e, c] : j.poly().terms()) support.insert(e);
  const std::vector<Exponents> columns(support.begin(), support.end());

  RationalMatrix coeffs(m, columns.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      coeffs(i, c) = members[i].poly().coeff(columns[c]);
    }
  }
  RationalMatrix transform = RationalMatrix::identity(m);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < coeffs.cols(); ++j) std::swap(coeffs(a, j), coeffs(b, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(transform(a, j), transform(b, j));
  };

  // Forward elimination; row r's pivot is its lowest-degree surviving monomial.
  std::vector<unsigned> pivot_degree;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns.size() && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(coeffs(p, c)) == 0) ++p;
    if (p == m) continue;
    if (p != r) swap_rows(p, r);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(coeffs(i, c)) == 0) continue;
      const Rational f = coeffs(i, c) / coeffs(r, c);
      for (std::size_t j = c; j < coeffs.cols(); ++j) coeffs(i, j) -= f * coeffs(r, j);
      for (std::size_t j = 0; j < m; ++j) transform(i, j) -= f * transform(r, j);
    }
    const unsigned deg = total_degree(columns[c]);
    if (deg == 0) {
      throw ContactError(ErrorCode::InvalidInput, "restricted system does not vanish at the origin");
    }
    pivot_degree.push_back(deg);
    ++r;
  }
  if (r < m) {
    throw ContactError(ErrorCode::TruncationInsufficient,
                       std::to_string(m - r) + " combination(s) of members vanish through degree " +
                           std::to_string(truncation));
  }

  // Reorder rows by decreasing order; stable so ties keep pivot order.
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return pivot_degree[a] > pivot_degree[b]; });

  OrderData od;
  od.truncation = truncation;
  od.adapted_transform = RationalMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    od.d.push_back(pivot_degree[perm[i]]);
    for (std::size_t j = 0; j < m; ++j) od.adapted_transform(i, j) = transform(perm[i], j);
  }
  od.corank = corank(od.d);
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 1 == m || od.d[i + 1] != od.d[i]) {
      od.filtration_jumps.push_back({od.d[i], static_cast<unsigned>(i + 1)});
    }
  }
  return od;
}

OrderData order_sequence_for_chart(const GraphChart& chart, const TruncationPolicy& policy) {
  if (policy.initial < 1 || policy.initial > policy.maximum) {
    throw ContactError(ErrorCode::InvalidInput, "truncation policy needs 1 <= initial <= maximum");
  }
  unsigned d = policy.initial;
  for (;;) {
    const RestrictedSystem sys = restrict_system(chart, d);
    try {
      return order_sequence(sys);
    } catch (const ContactError& e) {
      if (e.code() != ErrorCode::TruncationInsufficient) throw;
      if (sys.exact) {
        throw ContactError(ErrorCode::Degenerate,
                           "a nonzero combination of the linear equations of L vanishes on X");
      }
      if (d >= policy.maximum) throw;
      d = std::min(2 * d, policy.maximum);
    }
  }
}

unsigned corank(const std::vector<unsigned>& d) {
  return static_cast<unsigned>(std::count_if(d.begin(), d.end(), [](unsigned v) { return v >= 2; }));
}

unsigned corank(const OrderData& od) { return corank(od.d); }

std::vector<unsigned> reduced_sequence(const std::vector<unsigned>& d) {
  std::vector<unsigned> out(d);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<unsigned> reduced_sequence(const OrderData& od) { return reduced_sequence(od.d); }

std::vector<Jet> apply_transform(const RationalMatrix& t, const std::vector<Jet>& members) {
  if (t.cols() != members.size()) {
    throw ContactError(ErrorCode::MismatchedVars, "transform size does not match member count");
  }
  std::vector<Jet> out;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Jet acc(SparsePoly(members.front().num_vars()), members.front().truncation());
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (sgn(t(i, j)) != 0) acc = acc + t(i, j) * members[j];
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<SparsePoly> apply_transform(const RationalMatrix& t,
                                        const std::vector<SparsePoly>& members) {
  if (t.cols() != members.size()) {
    throw ContactError(ErrorCode::MismatchedVars, "transform size does not match member count");
  }
  std::vector<SparsePoly> out;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    SparsePoly acc(members.front().num_vars());
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (sgn(t(i, j)) != 0) acc += members[j] * t(i, j);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace contact
