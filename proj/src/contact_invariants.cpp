#include "contact/contact_invariants.hpp"

#include <algorithm>
#include <map>

#include "contact/error.hpp"

namespace contact {

BigInt a_term(const Dimensions& dims, unsigned d) {
  if (d < 1) throw ContactError(ErrorCode::Precondition, "a_term needs d >= 1");
  if (d == 1) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), dims.dim_l() + d - 2, d - 2);
  return out;
}

BigInt a_of(const std::vector<OrderData>& points, const Dimensions& dims) {
  BigInt total = 0;
  for (const auto& od : points)
    for (unsigned d : od.d)
      if (d >= 2) total += a_term(dims, d);
  return total;
}

namespace {

// Visits every exponent vector in `vars` variables with total degree <= budget.
void count_walk(unsigned vars, unsigned budget, BigInt& acc) {
  if (vars == 0) {
    ++acc;
    return;
  }
  for (unsigned take = 0; take <= budget; ++take) count_walk(vars - 1, budget - take, acc);
}

}  // namespace

BigInt count_monomials_below(unsigned num_vars, unsigned bound) {
  BigInt acc = 0;
  if (bound == 0) return acc;
  count_walk(num_vars, bound - 1, acc);
  return acc;
}

BigInt order_subsheaf_colength(const Dimensions& dims, const OrderData& od,
                               ColengthVariant variant) {
  if (dims.dim_l() < 1) {
    throw ContactError(ErrorCode::Precondition, "order subsheaf needs dim L >= 1");
  }
  // The quotient chain N_L -> K_1 -> ... -> K_r: step j removes
  // (F_j / F_{j-1})^* tensored with monomials below dbar_j - 1.
  BigInt total = 0;
  unsigned previous_dim = 0;
  for (const auto& step : od.filtration_jumps) {
    const unsigned jump = step.dimension - previous_dim;
    previous_dim = step.dimension;
    const unsigned bound = variant == ColengthVariant::Order ? step.order - 1 : step.order;
    total += BigInt(jump) * count_monomials_below(dims.dim_l(), bound);
  }
  return total;
}

namespace {

using SparseRow = std::map<Exponents, Rational, GrlexLess>;

BigInt monomials_up_to(std::size_t k, unsigned d) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k + d), static_cast<unsigned long>(k));
  return out;
}

// dim of Q[x]_{<=d} / (I + m^{d+1}).
unsigned truncated_quotient_dim(const std::vector<SparsePoly>& gens, std::size_t k, unsigned d) {
  std::map<Exponents, SparseRow, GrlexLess> pivots;  // keyed by leading monomial

  auto insert = [&](SparseRow row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        const Rational inv = 1 / lead->second;
        for (auto& [e, c] : row) c *= inv;
        const Exponents key = row.begin()->first;
        pivots.emplace(key, std::move(row));
        return;
      }
      const Rational f = lead->second;
      for (const auto& [e, c] : it->second) {
        auto [pos, inserted] = row.try_emplace(e, -f * c);
        if (!inserted) {
          pos->second -= f * c;
          if (sgn(pos->second) == 0) row.erase(pos);
        }
      }
    }
  };

  for (const auto& g : gens) {
    const SparsePoly gt = g.truncated(d);
    if (gt.is_zero()) continue;
    const unsigned ord = gt.order().value;
    for (unsigned deg = 0; deg + ord <= d; ++deg) {
      for (const auto& u : monomials_of_degree(k, deg)) {
        SparseRow row;
        for (const auto& [e, c] : gt.terms()) {
          Exponents prod(e);
          for (std::size_t i = 0; i < k; ++i) prod[i] += u[i];
          if (total_degree(prod) > d) break;
          row.emplace(std::move(prod), c);
        }
        insert(std::move(row));
      }
    }
  }
  const BigInt q = monomials_up_to(k, d) - BigInt(static_cast<unsigned long>(pivots.size()));
  return static_cast<unsigned>(q.get_ui());
}

}  // namespace

LengthResult local_length_detailed(const std::vector<SparsePoly>& gens, const LengthOptions& opts) {
  if (gens.empty()) {
    throw ContactError(ErrorCode::NotFiniteLength, "empty ideal has no finite colength");
  }
  const std::size_t k = gens.front().num_vars();
  for (const auto& g : gens) {
    if (g.num_vars() != k) throw ContactError(ErrorCode::MismatchedVars, "generators in different rings");
    if (sgn(g.constant_term()) != 0) {
      throw ContactError(ErrorCode::Precondition, "generator does not vanish at the origin");
    }
  }

  LengthResult res;
  res.quotient_dims.push_back(1);
  for (unsigned d = 1; d <= opts.max_degree; ++d) {
    const unsigned q = truncated_quotient_dim(gens, k, d);
    res.quotient_dims.push_back(q);
    if (q == res.quotient_dims[d - 1]) {
      res.length = q;
      res.certified_degree = d;
      return res;
    }
  }

  // Hilbert function increments of a finite-length quotient must eventually
  // drop to zero; steady or growing increments point at a positive-dimensional
  // quotient rather than a too-small bound.
  const auto& q = res.quotient_dims;
  const std::size_t last = q.size() - 1;
  std::string diag;
  if (last >= 3 && q[last] - q[last - 1] >= q[last - 1] - q[last - 2] &&
      q[last - 1] - q[last - 2] >= q[last - 2] - q[last - 3]) {
    diag = "quotient appears positive-dimensional (increments not decreasing)";
  } else {
    diag = "increments are shrinking; the degree bound may be too small";
  }
  throw ContactError(ErrorCode::NotFiniteLength,
                     "no stabilization up to degree " + std::to_string(opts.max_degree) +
                         " (Q_D=" + std::to_string(q[last]) + "): " + diag);
}

unsigned local_length(const std::vector<SparsePoly>& gens, const LengthOptions& opts) {
  return local_length_detailed(gens, opts).length;
}

bool corank_length_check(unsigned length, unsigned e, const OrderData& od) {
  if (std::any_of(od.d.begin(), od.d.end(), [](unsigned d) { return d > 2; })) {
    throw ContactError(ErrorCode::Precondition,
                       "length bound 2^e is only asserted when every order is <= 2");
  }
  if (e >= 32) return true;
  return static_cast<unsigned long long>(length) <= (1ull << e);
}

InequalityVerdict projection_inequality(const ContactReport& report) {
  InequalityVerdict v;
  v.margin = BigInt(report.dims.m) - report.a_value;
  v.holds = sgn(v.margin) >= 0;
  return v;
}

ContactReport build_report(const Scene& scene, const ReportOptions& opts) {
  ContactReport rep;
  rep.dims = scene.dims;
  rep.a_value = 0;
  rep.colength_oracle = 0;
  rep.quadratic_ok = true;

  for (const auto& pt : scene.points) {
    PointReport pr;
    pr.label = pt.label;
    pr.order = order_sequence_for_chart(pt.chart, opts.truncation);

    // The ideal of X n L on X is generated by the restricted members. A
    // truncated series certifies Q_D only for D <= truncation.
    RestrictedSystem sys = restrict_system(pt.chart, pr.order.truncation);
    LengthOptions lopts = opts.length;
    if (!sys.exact) {
      if (sys.truncation < lopts.max_degree) sys = restrict_system(pt.chart, lopts.max_degree);
      lopts.max_degree = std::min(lopts.max_degree, sys.truncation);
    }
    std::vector<SparsePoly> gens;
    for (const auto& j : sys.members) gens.push_back(j.poly());
    try {
      pr.local_length = local_length(gens, lopts);
    } catch (const ContactError& e) {
      if (e.code() != ErrorCode::NotFiniteLength) throw;
      pr.length_note = e.what();
    }

    pr.a_contribution = a_of({pr.order}, scene.dims);
    pr.colength = order_subsheaf_colength(scene.dims, pr.order);
    rep.a_value += pr.a_contribution;
    rep.colength_oracle += pr.colength;
    if (std::any_of(pr.order.d.begin(), pr.order.d.end(), [](unsigned d) { return d > 2; })) {
      rep.quadratic_ok = false;
    }
    rep.points.push_back(std::move(pr));
  }
  rep.inequality_holds = projection_inequality(rep).holds;
  rep.quadratic_regime = 2 * scene.dims.m <= scene.dims.n + scene.dims.c;
  return rep;
}

}  // namespace contact
