#include "contact/fibre_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "contact/error.hpp"

namespace contact {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(HighPrecision::default_precision()) {
  HighPrecision::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { HighPrecision::default_precision(saved_); }

std::string to_decimal(const HighPrecision& x, unsigned digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

IntegerMax integer_max_g(unsigned n, unsigned enumeration_bound) {
  if (n < 1) throw ContactError(ErrorCode::OutOfRange, "integer_max_g needs n >= 1");
  if (n > enumeration_bound) {
    throw ContactError(ErrorCode::OutOfRange, "n=" + std::to_string(n) +
                                                  " exceeds the enumeration bound " +
                                                  std::to_string(enumeration_bound));
  }
  IntegerMax best;
  best.value = -1;
  std::vector<unsigned> parts;

  // Multisets of positive parts, non-increasing, with sum of squares <= n.
  auto rec = [&](auto&& self, unsigned max_part, unsigned budget, const BigInt& partial) -> void {
    const BigInt value = partial + (n - static_cast<unsigned>(parts.size()));
    if (value > best.value || (value == best.value && parts.size() < best.witness.size())) {
      best.value = value;
      best.witness = parts;
    }
    if (parts.size() == n) return;
    for (unsigned x = max_part; x >= 1; --x) {
      if (x * x > budget) continue;
      BigInt term;
      mpz_ui_pow_ui(term.get_mpz_t(), 2, x);
      parts.push_back(x);
      self(self, x, budget - x * x, partial + term);
      parts.pop_back();
    }
  };
  unsigned root = 0;
  while ((root + 1) * (root + 1) <= n) ++root;
  rec(rec, root, n, BigInt(0));
  best.zeros = n - static_cast<unsigned>(best.witness.size());
  return best;
}

const char* to_string(Branch b) {
  return b == Branch::Exponential ? "exponential" : "linear";
}

namespace {

const HighPrecision& comparison_slack() {
  static const HighPrecision slack("1e-30");
  return slack;
}

Branch dominant(const HighPrecision& exponential, const HighPrecision& linear) {
  return linear > exponential + comparison_slack() ? Branch::Linear : Branch::Exponential;
}

}  // namespace

AnalyticBound analytic_bound(unsigned n, unsigned digits) {
  if (n < 1) throw ContactError(ErrorCode::OutOfRange, "analytic_bound needs n >= 1");
  PrecisionScope scope(digits);
  AnalyticBound out;
  const HighPrecision nn(n);
  out.exponential_term = boost::multiprecision::pow(HighPrecision(2), boost::multiprecision::sqrt(nn)) + nn - 1;
  out.linear_term = 1 + 2 * boost::multiprecision::sqrt(HighPrecision(2)) * (nn - 1);
  out.branch = dominant(out.exponential_term, out.linear_term);
  out.value = 2 * (out.branch == Branch::Exponential ? out.exponential_term : out.linear_term);
  return out;
}

HighPrecision be_lower_bound(unsigned n, unsigned digits) {
  if (n < 1) throw ContactError(ErrorCode::OutOfRange, "be_lower_bound needs n >= 1");
  PrecisionScope scope(digits);
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const HighPrecision nn(n);
  const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
  return sqrt(2 / pi) * pow(HighPrecision(2), sqrt(nn)) / sqrt(sqrt(nn));
}

bool mather_check(const std::vector<unsigned>& coranks, unsigned n) {
  unsigned long long sum_sq = 0;
  for (unsigned e : coranks) sum_sq += static_cast<unsigned long long>(e) * e;
  return sum_sq <= n && coranks.size() <= n;
}

double critical_point() { return 1.0 / std::log(2.0); }

namespace {

// log of 2^t / t
double log_ratio(double t) { return t * std::log(2.0) - std::log(t); }

constexpr double kPairTolerance = 1e-12;

}  // namespace

double critical_partner(double t) {
  if (!(t > 0) || !std::isfinite(t)) {
    throw ContactError(ErrorCode::OutOfRange, "critical_partner needs t > 0");
  }
  const double star = critical_point();
  if (std::abs(t - star) < kPairTolerance) return star;
  const double target = log_ratio(t);

  double lo, hi;
  if (t < star) {
    lo = star;
    hi = 2 * star;
    while (log_ratio(hi) < target) hi *= 2;
    // log_ratio increasing on [lo, hi]
    while (hi - lo > kPairTolerance * 0.1) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (log_ratio(mid) < target ? lo : hi) = mid;
    }
  } else {
    hi = star;
    lo = star / 2;
    while (log_ratio(lo) < target) lo /= 2;
    // log_ratio decreasing on [lo, hi]
    while (hi - lo > kPairTolerance * 0.1 * std::max(1.0, lo)) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (log_ratio(mid) < target ? hi : lo) = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CriticalPair critical_pair(double a) {
  const double star = critical_point();
  if (!(a > 0) || a > star + kPairTolerance) {
    throw ContactError(ErrorCode::OutOfRange, "critical_pair needs 0 < a < 1/ln 2");
  }
  CriticalPair out;
  out.degenerate = std::abs(a - star) < kPairTolerance;
  out.b = out.degenerate ? star : critical_partner(a);
  return out;
}

const char* to_string(CandidateType t) {
  switch (t) {
    case CandidateType::Uniform: return "(a,...,a)";
    case CandidateType::ManyLow: return "(a,...,a,b)";
    case CandidateType::ManyHigh: return "(a,b,...,b)";
  }
  return "?";
}

bool Candidate::chain_holds() const {
  return std::all_of(chain.begin(), chain.end(), [](const auto& step) { return step.second; });
}

namespace {

constexpr double kSphereTolerance = 1e-9;
constexpr double kChainSlack = 1e-9;

// Roots in (0, 1) of the sphere residual along the critical-pair curve.
std::vector<double> sphere_roots(const std::function<double(double)>& residual) {
  constexpr int kGrid = 4000;
  constexpr double kLow = 1e-6;
  std::vector<double> roots;
  double prev_a = kLow;
  double prev_r = residual(prev_a);
  for (int i = 1; i <= kGrid; ++i) {
    const double a = kLow + (1.0 - kLow) * i / kGrid;
    const double r = residual(a);
    if (r == 0) {
      roots.push_back(a);
    } else if ((prev_r < 0) != (r < 0) && prev_r != 0) {
      double lo = prev_a, hi = a, rlo = prev_r;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double rm = residual(mid);
        if ((rm < 0) == (rlo < 0)) {
          lo = mid;
          rlo = rm;
        } else {
          hi = mid;
        }
      }
      const double root = 0.5 * (lo + hi);
      if (std::abs(residual(root)) <= kSphereTolerance) roots.push_back(root);
    }
    prev_a = a;
    prev_r = r;
  }
  return roots;
}

}  // namespace

CandidateSet continuous_max_candidates(unsigned n) {
  if (n < 1) throw ContactError(ErrorCode::OutOfRange, "continuous_max_candidates needs n >= 1");
  const double nn = n;
  const double root_n = std::sqrt(nn);
  CandidateSet set;

  {
    Candidate c;
    c.type = CandidateType::Uniform;
    c.a = 1.0;  // n a^2 = n
    c.count_a = n;
    c.value = 2.0 * nn;
    c.chain.emplace_back("g <= 2n", c.value <= 2.0 * nn + kChainSlack);
    set.candidates.push_back(c);
  }

  if (n >= 2) {
    auto residual_low = [&](double a) {
      const double b = critical_partner(a);
      return (nn - 1) * a * a + b * b - nn;
    };
    for (double a : sphere_roots(residual_low)) {
      Candidate c;
      c.type = CandidateType::ManyLow;
      c.a = a;
      c.b = critical_partner(a);
      c.count_a = n - 1;
      c.count_b = 1;
      c.value = (nn - 1) * std::exp2(a) + std::exp2(c.b);
      const double step1 = (nn - 1 + std::exp2(c.b - a)) * std::exp2(a);
      const double step2 = (nn - 1 + std::exp2(root_n)) * 2.0;
      c.chain.emplace_back("g <= (n-1+2^(b-a)) 2^a", c.value <= step1 * (1 + kChainSlack));
      c.chain.emplace_back("(n-1+2^(b-a)) 2^a <= 2(n-1+2^sqrt(n))", step1 <= step2 * (1 + kChainSlack));
      set.candidates.push_back(c);
    }

    auto residual_high = [&](double a) {
      const double b = critical_partner(a);
      return a * a + (nn - 1) * b * b - nn;
    };
    for (double a : sphere_roots(residual_high)) {
      Candidate c;
      c.type = CandidateType::ManyHigh;
      c.a = a;
      c.b = critical_partner(a);
      c.count_a = 1;
      c.count_b = n - 1;
      c.value = std::exp2(a) + (nn - 1) * std::exp2(c.b);
      const double step1 = (1 + (nn - 1) * std::exp2(c.b - a)) * std::exp2(a);
      const double step2 = (1 + (nn - 1) * std::exp2(std::sqrt(nn / (nn - 1)))) * 2.0;
      const double step3 = 2.0 * (1 + (nn - 1) * std::exp2(1 + 1 / (nn - 1)));
      const double step4 = 2.0 * (1 + (nn - 1) * std::exp2(1.5));
      c.chain.emplace_back("b^2 <= n/(n-1)", c.b * c.b <= nn / (nn - 1) * (1 + kChainSlack));
      c.chain.emplace_back("g <= (1+(n-1)2^(b-a)) 2^a", c.value <= step1 * (1 + kChainSlack));
      c.chain.emplace_back("(1+(n-1)2^(b-a)) 2^a <= (1+(n-1)2^sqrt(n/(n-1))) 2",
                           step1 <= step2 * (1 + kChainSlack));
      c.chain.emplace_back("< 2(1+(n-1)2^(1+1/(n-1)))", step2 < step3);
      if (n >= 3) c.chain.emplace_back("< 2(1+(n-1)2^(3/2))", step3 < step4);
      set.candidates.push_back(c);
    }
  }

  for (const auto& c : set.candidates) set.max_value = std::max(set.max_value, c.value);
  return set;
}

CrossoverReport crossover_report(unsigned first, unsigned last, unsigned digits) {
  CrossoverReport rep;
  for (unsigned n = std::max(first, 1u); n <= last; ++n) {
    const AnalyticBound b = analytic_bound(n, digits);
    rep.rows.push_back({n, b.branch, b.exponential_term, b.linear_term});
  }
  if (!rep.rows.empty() && rep.rows.back().branch == Branch::Exponential) {
    std::size_t i = rep.rows.size();
    while (i > 0 && rep.rows[i - 1].branch == Branch::Exponential) --i;
    rep.crossover = rep.rows[i].n;
  }
  rep.agrees_with_claim = rep.crossover && *rep.crossover == rep.claimed_last_linear + 1;
  return rep;
}

std::vector<BoundRow> bound_table(unsigned first, unsigned last, unsigned digits,
                                  unsigned enumeration_bound) {
  std::vector<BoundRow> rows;
  if (last > enumeration_bound && first <= last) {
    throw ContactError(ErrorCode::OutOfRange, "range end " + std::to_string(last) +
                                                  " exceeds the enumeration bound " +
                                                  std::to_string(enumeration_bound));
  }
  for (unsigned n = std::max(first, 1u); n <= last; ++n) {
    BoundRow row;
    row.n = n;
    row.integer_max = integer_max_g(n, enumeration_bound);
    row.analytic = analytic_bound(n, digits);
    row.lower_bound = be_lower_bound(n, digits);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace contact
