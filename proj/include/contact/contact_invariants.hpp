#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact/chart_model.hpp"
#include "contact/order_seq.hpp"

namespace contact {

// Summand of a(X, L) for one adapted slot of order d:
// binom(dim L + d - 2, d - 2), zero when d = 1.
BigInt a_term(const Dimensions& dims, unsigned d);

// a(X, L): sum of a_term over every point and every slot with d_i >= 2.
BigInt a_of(const std::vector<OrderData>& points, const Dimensions& dims);

enum class ColengthVariant {
  Order,     // bound d_i - 1 per slot
  OrderOne,  // bound d_i per slot
};

// Number of monomials in `num_vars` variables of total degree < bound,
// counted by walking them.
BigInt count_monomials_below(unsigned num_vars, unsigned bound);

// Length of the quotient of N_L by the order subsheaf at p, realized as
// filtration bookkeeping: each jump of the order filtration contributes
// (jump in dimension) x (monomials in dim-L variables below d-bar - 1).
BigInt order_subsheaf_colength(const Dimensions& dims, const OrderData& od,
                               ColengthVariant variant = ColengthVariant::Order);

struct LengthOptions {
  unsigned max_degree = 32;
};

struct LengthResult {
  unsigned length = 0;
  unsigned certified_degree = 0;  // D with Q_D = Q_{D-1}, hence m^D inside the ideal
  std::vector<unsigned> quotient_dims;  // Q_0, Q_1, ..., Q_D
};

// Colength of the ideal generated by `gens` in the local ring at the origin
// of k variables. Q_D = dim Q[x]_{<=D} / (I + m^{D+1}) is computed for
// D = 1, 2, ... until Q_D = Q_{D-1}. Throws NotFiniteLength (with a
// diagnostic on the growth of Q_D) when no stabilization occurs by
// opts.max_degree.
LengthResult local_length_detailed(const std::vector<SparsePoly>& gens,
                                   const LengthOptions& opts = {});
unsigned local_length(const std::vector<SparsePoly>& gens, const LengthOptions& opts = {});

// length <= 2^e; only meaningful when every d_i <= 2 (throws Precondition otherwise).
bool corank_length_check(unsigned length, unsigned e, const OrderData& od);

struct PointReport {
  std::string label;
  OrderData order;
  std::optional<unsigned> local_length;  // nullopt: not certified finite
  std::string length_note;               // diagnostic when local_length is absent
  BigInt a_contribution;
  BigInt colength;
};

struct ContactReport {
  Dimensions dims;
  std::vector<PointReport> points;
  BigInt a_value;
  BigInt colength_oracle;
  bool inequality_holds = false;
  bool quadratic_regime = false;
  bool quadratic_ok = false;
};

struct InequalityVerdict {
  bool holds = false;
  BigInt margin;  // m - a(X, L)
};

InequalityVerdict projection_inequality(const ContactReport& report);

struct ReportOptions {
  TruncationPolicy truncation;
  LengthOptions length;
};

ContactReport build_report(const Scene& scene, const ReportOptions& opts = {});

}  // namespace contact
