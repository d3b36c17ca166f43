#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace contact {

// mpq_class keeps values in lowest terms with a positive denominator after
// every arithmetic operation; only values built from raw strings need an
// explicit canonicalize().
using Rational = mpq_class;
using BigInt = mpz_class;

using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);

// Graded order used for canonical storage: lower total degree first, and
// within one degree the lexicographically earliest monomial first
// (x1^2 < x1*x2 < x2^2 in this order).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Valuation of a polynomial or jet at the origin.
struct Order {
  enum class Kind { Finite, Infinite, UnknownBeyondTruncation };

  Kind kind = Kind::Infinite;
  unsigned value = 0;  // meaningful for Finite; the lower bound D+1 for Unknown

  static Order finite(unsigned v) { return {Kind::Finite, v}; }
  static Order infinite() { return {Kind::Infinite, 0}; }
  static Order beyond(unsigned truncation) {
    return {Kind::UnknownBeyondTruncation, truncation + 1};
  }

  bool is_finite() const { return kind == Kind::Finite; }
  // True when the order is known to be at least `bound`.
  bool at_least(unsigned bound) const { return kind != Kind::Finite || value >= bound; }

  friend bool operator==(const Order&, const Order&) = default;
};

std::string to_string(const Order& o);

class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit SparsePoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static SparsePoly constant(std::size_t num_vars, const Rational& c);
  static SparsePoly variable(std::size_t num_vars, std::size_t index);
  static SparsePoly monomial(const Exponents& e, const Rational& c);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c to the coefficient of e; drops the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;

  // Maximum total degree; 0 for the zero polynomial.
  unsigned degree() const;
  Order order() const;

  SparsePoly homogeneous_part(unsigned k) const;
  SparsePoly truncated(unsigned max_degree) const;
  SparsePoly derivative(std::size_t var) const;
  // Re-embeds into a ring with more variables (new ones appended).
  SparsePoly widened(std::size_t num_vars) const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  friend class Jet;
  void check_same_ring(const SparsePoly& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

SparsePoly pow(const SparsePoly& p, unsigned k);

// Degree-truncated power series: all terms of total degree > truncation are
// discarded, i.e. arithmetic happens in Q[[x]] / m^{truncation+1}.
class Jet {
 public:
  Jet(SparsePoly poly, unsigned truncation);

  const SparsePoly& poly() const { return poly_; }
  unsigned truncation() const { return truncation_; }
  std::size_t num_vars() const { return poly_.num_vars(); }
  bool is_zero() const { return poly_.is_zero(); }

  // A zero jet, or one whose lowest term lies past the truncation, has an
  // order that cannot be decided from the stored data.
  Order order() const;
  Jet truncated(unsigned d) const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const Rational& c, const Jet& a);

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  SparsePoly poly_;
  unsigned truncation_;
};

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
Jet jet_mul(const Jet& a, const Jet& b);
Order order_of(const SparsePoly& p);
Order order_of(const Jet& j);

// Composition p(assignment[0], ..., assignment[k-1]) truncated at degree d.
// Every assignment polynomial lives in the same target ring.
Jet substitute(const SparsePoly& p, std::span<const SparsePoly> assignment,
               unsigned d);

// Monomials in `num_vars` variables of total degree exactly k, in GrlexLess order.
std::vector<Exponents> monomials_of_degree(std::size_t num_vars, unsigned k);

}  // namespace contact
