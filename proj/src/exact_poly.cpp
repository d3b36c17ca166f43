#include "contact/exact_poly.hpp"

#include <algorithm>
#include <numeric>

#include "contact/error.hpp"

namespace contact {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MismatchedVars: return "MISMATCHED-VARS";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::InvalidInput: return "INVALID-INPUT";
    case ErrorCode::NonVanishing: return "NON-VANISHING";
    case ErrorCode::NonTransverseBase: return "NON-TRANSVERSE-BASE";
    case ErrorCode::TruncationInsufficient: return "TRUNCATION-INSUFFICIENT";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::NotFiniteLength: return "NOT-FINITE-LENGTH";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::OutOfRange: return "OUT-OF-RANGE";
  }
  return "UNKNOWN";
}

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  // larger leading exponent sorts first
  return b < a;
}

std::string to_string(const Order& o) {
  switch (o.kind) {
    case Order::Kind::Finite: return std::to_string(o.value);
    case Order::Kind::Infinite: return "INFINITE";
    case Order::Kind::UnknownBeyondTruncation:
      return ">=" + std::to_string(o.value) + " (beyond truncation)";
  }
  return "?";
}

SparsePoly SparsePoly::constant(std::size_t num_vars, const Rational& c) {
  SparsePoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) {
    throw ContactError(ErrorCode::MismatchedVars, "variable index out of range");
  }
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(e, 1);
}

SparsePoly SparsePoly::monomial(const Exponents& e, const Rational& c) {
  SparsePoly p(e.size());
  p.add_term(e, c);
  return p;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != num_vars_) {
    throw ContactError(ErrorCode::MismatchedVars,
                       "exponent tuple length does not match num_vars");
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational SparsePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::constant_term() const {
  return coeff(Exponents(num_vars_, 0));
}

unsigned SparsePoly::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

Order SparsePoly::order() const {
  if (terms_.empty()) return Order::infinite();
  return Order::finite(total_degree(terms_.begin()->first));
}

SparsePoly SparsePoly::homogeneous_part(unsigned k) const {
  SparsePoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == k) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

SparsePoly SparsePoly::truncated(unsigned max_degree) const {
  SparsePoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) > max_degree) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  if (var >= num_vars_) {
    throw ContactError(ErrorCode::MismatchedVars, "derivative variable out of range");
  }
  SparsePoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

SparsePoly SparsePoly::widened(std::size_t num_vars) const {
  if (num_vars < num_vars_) {
    throw ContactError(ErrorCode::MismatchedVars, "cannot narrow a polynomial ring");
  }
  SparsePoly out(num_vars);
  for (const auto& [e, c] : terms_) {
    Exponents w = e;
    w.resize(num_vars, 0);
    out.add_term(w, c);
  }
  return out;
}

void SparsePoly::check_same_ring(const SparsePoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw ContactError(ErrorCode::MismatchedVars,
                       "polynomials have " + std::to_string(num_vars_) + " and " +
                           std::to_string(other.num_vars_) + " variables");
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  check_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

namespace {

// Product with every term of degree > cap dropped; cap < 0 means no cap.
SparsePoly multiply_capped(const SparsePoly& a, const SparsePoly& b, long cap) {
  if (a.num_vars() != b.num_vars()) {
    throw ContactError(ErrorCode::MismatchedVars,
                       "polynomials have " + std::to_string(a.num_vars()) + " and " +
                           std::to_string(b.num_vars()) + " variables");
  }
  SparsePoly out(a.num_vars());
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    const long da = total_degree(ea);
    if (cap >= 0 && da > cap) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (cap >= 0 && da + static_cast<long>(total_degree(eb)) > cap) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  return multiply_capped(a, b, -1);
}

SparsePoly pow(const SparsePoly& p, unsigned k) {
  SparsePoly result = SparsePoly::constant(p.num_vars(), 1);
  SparsePoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Jet::Jet(SparsePoly poly, unsigned truncation)
    : poly_(poly.truncated(truncation)), truncation_(truncation) {}

Order Jet::order() const {
  const Order o = poly_.order();
  if (!o.is_finite() || o.value > truncation_) return Order::beyond(truncation_);
  return o;
}

Jet Jet::truncated(unsigned d) const {
  return Jet(poly_, std::min(d, truncation_));
}

Jet operator+(const Jet& a, const Jet& b) {
  const unsigned t = std::min(a.truncation_, b.truncation_);
  return Jet(a.poly_.truncated(t) + b.poly_.truncated(t), t);
}

Jet operator-(const Jet& a, const Jet& b) {
  const unsigned t = std::min(a.truncation_, b.truncation_);
  return Jet(a.poly_.truncated(t) - b.poly_.truncated(t), t);
}

Jet operator*(const Jet& a, const Jet& b) {
  const unsigned t = std::min(a.truncation_, b.truncation_);
  return Jet(multiply_capped(a.poly_, b.poly_, t), t);
}

Jet operator*(const Rational& c, const Jet& a) {
  return Jet(a.poly_ * c, a.truncation_);
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) { return a + b; }

Jet jet_mul(const Jet& a, const Jet& b) { return a * b; }

Order order_of(const SparsePoly& p) { return p.order(); }

Order order_of(const Jet& j) { return j.order(); }

Jet substitute(const SparsePoly& p, std::span<const SparsePoly> assignment,
               unsigned d) {
  if (assignment.size() != p.num_vars()) {
    throw ContactError(ErrorCode::MismatchedVars,
                       "substitution needs one assignment per variable");
  }
  const std::size_t target_vars = assignment.empty() ? 0 : assignment[0].num_vars();
  for (const auto& a : assignment) {
    if (a.num_vars() != target_vars) {
      throw ContactError(ErrorCode::MismatchedVars,
                         "assignment polynomials live in different rings");
    }
  }

  // Cache truncated powers of each assignment; exponents repeat across terms.
  std::vector<std::vector<Jet>> powers(assignment.size());
  auto power = [&](std::size_t var, unsigned k) -> const Jet& {
    auto& cache = powers[var];
    if (cache.empty()) cache.emplace_back(SparsePoly::constant(target_vars, 1), d);
    while (cache.size() <= k) {
      cache.push_back(cache.back() * Jet(assignment[var], d));
    }
    return cache[k];
  };

  Jet result(SparsePoly(target_vars), d);
  for (const auto& [e, c] : p.terms()) {
    Jet term(SparsePoly::constant(target_vars, c), d);
    for (std::size_t v = 0; v < e.size() && !term.is_zero(); ++v) {
      if (e[v] > 0) term = term * power(v, e[v]);
    }
    result = result + term;
  }
  return result;
}

std::vector<Exponents> monomials_of_degree(std::size_t num_vars, unsigned k) {
  std::vector<Exponents> out;
  if (num_vars == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Exponents e(num_vars, 0);
  // Walk exponents with the first variable taking the largest share first,
  // which yields GrlexLess order directly.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == num_vars) {
      e[var] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned take = remaining + 1; take-- > 0;) {
      e[var] = take;
      self(self, var + 1, remaining - take);
    }
    e[var] = 0;
  };
  rec(rec, 0, k);
  return out;
}

}  // namespace contact
