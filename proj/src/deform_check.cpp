#include "contact/deform_check.hpp"

#include <algorithm>

#include "contact/error.hpp"

namespace contact {

int sigma(SignConvention s) { return s == SignConvention::Moving ? 1 : -1; }

namespace {

void check_deformation(const GraphChart& chart, const Deformation& def) {
  if (def.g.size() != chart.dims.m) {
    throw ContactError(ErrorCode::InvalidInput, "g: expected " + std::to_string(chart.dims.m) +
                                                    " entries, got " + std::to_string(def.g.size()));
  }
  for (const auto& g : def.g) {
    if (g.num_vars() != chart.num_chart_vars()) {
      throw ContactError(ErrorCode::MismatchedVars, "g: polynomial in the wrong variable set");
    }
  }
}

Rational linear_coeff(const SparsePoly& p, std::size_t var) {
  Exponents e(p.num_vars(), 0);
  e[var] = 1;
  return p.coeff(e);
}

unsigned working_truncation(const OrderData& od) {
  return std::max(od.truncation, od.d.empty() ? 1u : od.d.front());
}

// Adapted-frame members and deformation, both restricted to X.
struct AdaptedFrame {
  ChartEmbedding emb;
  std::vector<Jet> members;
  std::vector<Jet> g;
};

AdaptedFrame adapted_frame(const GraphChart& chart, const OrderData& od, const Deformation& def) {
  check_deformation(chart, def);
  if (od.d.size() != chart.dims.m) {
    throw ContactError(ErrorCode::InvalidInput, "order data does not match the chart");
  }
  AdaptedFrame fr{embed_chart(chart, working_truncation(od)), {}, {}};
  std::vector<Jet> members, g;
  for (const auto& f : chart.ambient_members()) members.push_back(restrict_to_x(f, fr.emb));
  for (const auto& gi : def.g) g.push_back(restrict_to_x(gi, fr.emb));
  fr.members = apply_transform(od.adapted_transform, members);
  fr.g = apply_transform(od.adapted_transform, g);
  return fr;
}

// a (chart variables) = D(embedding)(0) applied to a motion of the X coordinates.
std::vector<Rational> lift_to_chart(const ChartEmbedding& emb, const std::vector<Rational>& a_x) {
  std::vector<Rational> a(emb.embedding.size());
  for (std::size_t j = 0; j < emb.embedding.size(); ++j) {
    for (std::size_t l = 0; l < a_x.size(); ++l) {
      a[j] += linear_coeff(emb.embedding[j].poly(), l) * a_x[l];
    }
  }
  return a;
}

// Elements p + eps q with eps^2 = 0, truncated like Jets.
struct DualJet {
  Jet re;
  Jet eps;

  friend DualJet operator+(const DualJet& x, const DualJet& y) {
    return {x.re + y.re, x.eps + y.eps};
  }
  friend DualJet operator*(const DualJet& x, const DualJet& y) {
    return {x.re * y.re, x.re * y.eps + x.eps * y.re};
  }
};

// p(w + eps a), expanded term by term over the dual numbers.
DualJet shift(const DualJet& p, const std::vector<Rational>& a) {
  const std::size_t k = p.re.num_vars();
  const unsigned t = std::min(p.re.truncation(), p.eps.truncation());
  const Jet zero(SparsePoly(k), t);
  std::vector<DualJet> moved;
  for (std::size_t l = 0; l < k; ++l) {
    moved.push_back({Jet(SparsePoly::variable(k, l), t), Jet(SparsePoly::constant(k, a[l]), t)});
  }
  auto expand = [&](const Jet& part) {
    DualJet acc{zero, zero};
    for (const auto& [e, c] : part.poly().terms()) {
      DualJet term{Jet(SparsePoly::constant(k, c), t), zero};
      for (std::size_t l = 0; l < k; ++l)
        for (unsigned r = 0; r < e[l]; ++r) term = term * moved[l];
      acc = acc + term;
    }
    return acc;
  };
  const DualJet re = expand(p.re);
  const DualJet eps = expand(p.eps);
  // (re_0 + eps re_1) + eps (eps_0 + eps eps_1) = re_0 + eps (re_1 + eps_0)
  return {re.re, re.eps + eps.re};
}

}  // namespace

LinearSystem tangency_system(const GraphChart& chart, const Deformation& def, SignConvention sign) {
  check_deformation(chart, def);
  const std::size_t k = chart.num_chart_vars();
  const std::size_t m = chart.dims.m;
  const auto members = chart.ambient_members();

  LinearSystem sys;
  sys.unknowns = chart.chart_vars();
  for (std::size_t i = 0; i < m; ++i) sys.unknowns.push_back("b" + std::to_string(i + 1));

  const std::size_t rows = 2 * m + chart.base_fns.size();
  sys.coefficients = RationalMatrix(rows, k + m);
  sys.rhs.assign(rows, Rational(0));
  std::size_t r = 0;
  for (std::size_t i = 0; i < m; ++i, ++r) {
    sys.coefficients(r, k + i) = 1;
    sys.rhs[r] = -sigma(sign) * def.g[i].constant_term();
  }
  for (std::size_t i = 0; i < m; ++i, ++r) {
    sys.coefficients(r, k + i) = 1;
    for (std::size_t j = 0; j < k; ++j) sys.coefficients(r, j) = -linear_coeff(members[i], j);
  }
  for (const auto& base : chart.base_fns) {
    for (std::size_t j = 0; j < k; ++j) sys.coefficients(r, j) = linear_coeff(base, j);
    ++r;
  }
  return sys;
}

std::optional<TangentVector> solve_tangency(const GraphChart& chart, const Deformation& def,
                                            SignConvention sign) {
  const LinearSystem sys = tangency_system(chart, def, sign);
  const auto x = solve(sys.coefficients, sys.rhs);
  if (!x) return std::nullopt;
  const std::size_t k = chart.num_chart_vars();
  TangentVector tv;
  tv.a.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(k));
  tv.b.assign(x->begin() + static_cast<std::ptrdiff_t>(k), x->end());
  return tv;
}

NecessaryReport necessary_check(const GraphChart& chart, const OrderData& od,
                                const Deformation& def) {
  const AdaptedFrame fr = adapted_frame(chart, od, def);
  NecessaryReport rep;
  for (std::size_t i = 0; i < fr.g.size(); ++i) {
    rep.orders.push_back(fr.g[i].order());
    rep.required.push_back(od.d[i] - 1);
    if (!rep.orders.back().at_least(od.d[i] - 1)) rep.ok = false;
  }
  return rep;
}

SufficiencyReport sufficiency_check(const GraphChart& chart, const OrderData& od,
                                    const Deformation& def, SignConvention sign) {
  SufficiencyReport rep;
  rep.necessary_ok = necessary_check(chart, od, def).ok;
  if (!rep.necessary_ok) return rep;

  const AdaptedFrame fr = adapted_frame(chart, od, def);
  const std::size_t k = fr.emb.x_coords.size();
  const int s = sigma(sign);

  // One equation per slot i and monomial mu of degree < d_i:
  //   coeff_mu(g_i) + s * sum_l a_l coeff_mu(d h_i / d w_l) = 0.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < fr.members.size(); ++i) {
    std::vector<SparsePoly> grads;
    for (std::size_t l = 0; l < k; ++l) grads.push_back(fr.members[i].poly().derivative(l));
    for (unsigned deg = 0; deg < od.d[i]; ++deg) {
      for (const auto& mu : monomials_of_degree(k, deg)) {
        std::vector<Rational> row(k);
        bool nonzero = false;
        for (std::size_t l = 0; l < k; ++l) {
          row[l] = s * grads[l].coeff(mu);
          nonzero = nonzero || sgn(row[l]) != 0;
        }
        const Rational target = -fr.g[i].poly().coeff(mu);
        if (!nonzero && sgn(target) == 0) continue;
        rows.push_back(std::move(row));
        rhs.push_back(target);
      }
    }
  }

  std::vector<Rational> a_x(k);
  if (!rows.empty()) {
    RationalMatrix mat(rows.size(), k);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t l = 0; l < k; ++l) mat(r, l) = rows[r][l];
    const auto sol = solve(mat, rhs);
    if (!sol) return rep;
    a_x = *sol;
  }

  TangentVector w;
  w.a = lift_to_chart(fr.emb, a_x);
  for (const auto& f : chart.ambient_members()) {
    Rational b = 0;
    for (std::size_t j = 0; j < w.a.size(); ++j) b += linear_coeff(f, j) * w.a[j];
    w.b.push_back(b);
  }
  rep.ok = true;
  rep.witness = std::move(w);
  return rep;
}

bool transport_verify(const GraphChart& chart, const OrderData& od, const Deformation& def,
                      const std::vector<Rational>& a, SignConvention sign) {
  const AdaptedFrame fr = adapted_frame(chart, od, def);
  if (a.size() != chart.num_chart_vars()) {
    throw ContactError(ErrorCode::InvalidInput, "a: expected one entry per chart variable");
  }
  std::vector<Rational> a_x;
  for (auto j : fr.emb.free_vars) a_x.push_back(a[j]);
  // The motion must be tangent to X, i.e. determined by its X coordinates.
  if (lift_to_chart(fr.emb, a_x) != a) return false;

  const Rational s = sigma(sign);
  for (std::size_t i = 0; i < fr.members.size(); ++i) {
    const DualJet moved = shift({fr.members[i], s * fr.g[i]}, a_x);
    const Order re = moved.re.order();
    const Order eps = moved.eps.order();
    if (!re.at_least(od.d[i]) || !eps.at_least(od.d[i])) return false;
    const bool exact = (re.is_finite() && re.value == od.d[i]) ||
                       (eps.is_finite() && eps.value == od.d[i]);
    if (!exact) return false;
  }
  return true;
}

}  // namespace contact
