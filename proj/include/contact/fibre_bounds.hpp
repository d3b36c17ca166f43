#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "contact/exact_poly.hpp"

namespace contact {

using HighPrecision = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kDefaultEnumerationBound = 200;

// Sets the working precision of HighPrecision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

std::string to_decimal(const HighPrecision& x, unsigned digits);

// Max of sum 2^{x_i} over non-negative integer vectors of length n with
// sum x_i^2 <= n. The witness lists the positive entries (non-increasing);
// the remaining `zeros` coordinates contribute 1 each.
struct IntegerMax {
  BigInt value;
  std::vector<unsigned> witness;
  unsigned zeros = 0;
};

IntegerMax integer_max_g(unsigned n, unsigned enumeration_bound = kDefaultEnumerationBound);

enum class Branch { Exponential, Linear };
const char* to_string(Branch b);

// 2 max(2^sqrt(n) + n - 1, 1 + 2 sqrt(2) (n - 1)).
struct AnalyticBound {
  HighPrecision value;
  HighPrecision exponential_term;  // 2^sqrt(n) + n - 1
  HighPrecision linear_term;       // 1 + 2 sqrt(2) (n - 1)
  Branch branch = Branch::Exponential;
};

AnalyticBound analytic_bound(unsigned n, unsigned digits = kDefaultDigits);

// sqrt(2/pi) 2^sqrt(n) / n^{1/4}.
HighPrecision be_lower_bound(unsigned n, unsigned digits = kDefaultDigits);

// sum e_p^2 <= n and at most n points.
bool mather_check(const std::vector<unsigned>& coranks, unsigned n);

// Minimizer of 2^t / t.
double critical_point();

// For t != 1/ln 2, the other solution s of 2^s/s = 2^t/t (on the opposite
// side of the minimizer), by bisection to 1e-12. At the minimizer returns it.
double critical_partner(double t);

struct CriticalPair {
  double b = 0;
  bool degenerate = false;  // a was (numerically) the minimizer itself
};

// The b > 1/ln 2 with 2^a/a = 2^b/b. Throws OutOfRange unless 0 < a <= 1/ln 2.
CriticalPair critical_pair(double a);

enum class CandidateType { Uniform, ManyLow, ManyHigh };  // (a..a), (a..a,b), (a,b..b)
const char* to_string(CandidateType t);

struct Candidate {
  CandidateType type = CandidateType::Uniform;
  double a = 0;
  double b = 0;
  unsigned count_a = 0;
  unsigned count_b = 0;
  double value = 0;
  // Each step of the upper-bound chain for this type, checked numerically.
  std::vector<std::pair<std::string, bool>> chain;
  bool chain_holds() const;
};

struct CandidateSet {
  std::vector<Candidate> candidates;
  double max_value = 0;
};

// Critical points of sum 2^{x_i} on the sphere sum x_i^2 = n of the three
// shapes, each solved to 1e-9 on the constraint.
CandidateSet continuous_max_candidates(unsigned n);

struct CrossoverRow {
  unsigned n = 0;
  Branch branch = Branch::Exponential;
  HighPrecision exponential_term;
  HighPrecision linear_term;
};

struct CrossoverReport {
  std::vector<CrossoverRow> rows;
  // Smallest n from which the exponential branch dominates through the end
  // of the range; nullopt when the last row is still linear.
  std::optional<unsigned> crossover;
  unsigned claimed_last_linear = 37;
  bool agrees_with_claim = false;
};

CrossoverReport crossover_report(unsigned first, unsigned last, unsigned digits = kDefaultDigits);

struct BoundRow {
  unsigned n = 0;
  IntegerMax integer_max;
  AnalyticBound analytic;
  HighPrecision lower_bound;
};

std::vector<BoundRow> bound_table(unsigned first, unsigned last, unsigned digits = kDefaultDigits,
                                  unsigned enumeration_bound = kDefaultEnumerationBound);

}  // namespace contact
