#include "contact/chart_model.hpp"

#include <algorithm>
#include <set>

#include "contact/error.hpp"
#include "contact/linalg.hpp"

namespace contact {

void Dimensions::validate() const {
  if (n < 1) throw ContactError(ErrorCode::InvalidInput, "n must be >= 1");
  if (c < 1) throw ContactError(ErrorCode::InvalidInput, "c must be >= 1");
  if (m < 1 || m > n + c - 1) {
    throw ContactError(ErrorCode::InvalidInput,
                       "m must satisfy 1 <= m <= n+c-1 (got m=" + std::to_string(m) + ")");
  }
}

std::vector<std::string> GraphChart::chart_vars() const {
  std::vector<std::string> vars = x_vars;
  vars.insert(vars.end(), extra_y_vars.begin(), extra_y_vars.end());
  return vars;
}

std::vector<SparsePoly> GraphChart::ambient_members() const {
  std::vector<SparsePoly> out = graph_fns;
  const std::size_t nv = num_chart_vars();
  for (std::size_t k = 0; k < extra_y_vars.size(); ++k) {
    out.push_back(SparsePoly::variable(nv, x_vars.size() + k));
  }
  return out;
}

namespace {

RationalMatrix linear_parts(const std::vector<SparsePoly>& fns, std::size_t nv) {
  RationalMatrix a(fns.size(), nv);
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      Exponents e(nv, 0);
      e[j] = 1;
      a(i, j) = fns[i].coeff(e);
    }
  }
  return a;
}

void expect_count(const char* field, std::size_t got, std::size_t want) {
  if (got != want) {
    throw ContactError(ErrorCode::InvalidInput,
                       std::string(field) + ": expected " + std::to_string(want) +
                           " entries, got " + std::to_string(got));
  }
}

}  // namespace

GraphChart validate_chart(GraphChart chart) {
  const Dimensions& d = chart.dims;
  d.validate();
  expect_count("x_vars", chart.x_vars.size(), d.dim_l());
  expect_count("extra_y_vars", chart.extra_y_vars.size(), d.tall() ? d.m - d.c : 0);
  expect_count("graph_fns", chart.graph_fns.size(), std::min(d.m, d.c));
  expect_count("base_fns", chart.base_fns.size(), d.tall() ? 0 : d.c - d.m);

  const auto vars = chart.chart_vars();
  if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) {
    throw ContactError(ErrorCode::InvalidInput, "x_vars/extra_y_vars: duplicate variable name");
  }

  const std::size_t nv = chart.num_chart_vars();
  auto check = [&](const std::vector<SparsePoly>& fns, const char* field) {
    for (std::size_t i = 0; i < fns.size(); ++i) {
      const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
      if (fns[i].num_vars() != nv) {
        throw ContactError(ErrorCode::MismatchedVars, where + ": wrong variable set");
      }
      if (sgn(fns[i].constant_term()) != 0) {
        throw ContactError(ErrorCode::NonVanishing,
                           where + " does not vanish at the origin (p is not on X and L)");
      }
    }
  };
  check(chart.graph_fns, "graph_fns");
  check(chart.base_fns, "base_fns");

  if (!chart.base_fns.empty() &&
      rank(linear_parts(chart.base_fns, nv)) != chart.base_fns.size()) {
    throw ContactError(ErrorCode::NonTransverseBase,
                       "base_fns: linear parts are dependent (projection of X to L not smooth at p)");
  }
  return chart;
}

ChartEmbedding embed_chart(const GraphChart& chart, unsigned truncation) {
  const std::size_t nv = chart.num_chart_vars();
  const auto vars = chart.chart_vars();
  ChartEmbedding emb;
  emb.truncation = truncation;

  if (chart.base_fns.empty()) {
    emb.x_coords = vars;
    for (std::size_t j = 0; j < nv; ++j) {
      emb.free_vars.push_back(j);
      emb.embedding.emplace_back(SparsePoly::variable(nv, j), truncation);
    }
    emb.exact = true;
    return emb;
  }

  // Solve base_fns = 0 for the pivot variables u in terms of the free ones v:
  //   A_u u + A_v v + N(u, v) = 0  =>  u = -A_u^{-1} (A_v v + N(u, v)),
  // iterated; each pass fixes one more degree.
  const RationalMatrix lin = linear_parts(chart.base_fns, nv);
  const auto pivots = pivot_columns(lin);
  const std::size_t r = pivots.size();
  if (r != chart.base_fns.size()) {
    throw ContactError(ErrorCode::NonTransverseBase, "base_fns: linear parts are dependent");
  }
  std::vector<bool> is_pivot(nv, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < nv; ++j) {
    if (!is_pivot[j]) {
      emb.free_vars.push_back(j);
      emb.x_coords.push_back(vars[j]);
    }
  }
  const std::size_t k = emb.free_vars.size();

  RationalMatrix a_u(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a_u(i, j) = lin(i, pivots[j]);
  const RationalMatrix a_u_inv = *inverse(a_u);

  std::vector<SparsePoly> assignment(nv, SparsePoly(k));
  for (std::size_t f = 0; f < k; ++f) {
    assignment[emb.free_vars[f]] = SparsePoly::variable(k, f);
  }
  std::vector<SparsePoly> rest(r);  // A_v v + N(x), i.e. base_fns minus the pivot-linear part
  for (std::size_t i = 0; i < r; ++i) {
    rest[i] = chart.base_fns[i];
    for (std::size_t j = 0; j < r; ++j) {
      Exponents e(nv, 0);
      e[pivots[j]] = 1;
      rest[i].add_term(e, -lin(i, pivots[j]));
    }
  }

  for (unsigned pass = 0; pass <= truncation + 1; ++pass) {
    std::vector<Jet> evaluated;
    for (const auto& f : rest) evaluated.push_back(substitute(f, assignment, truncation));
    bool changed = false;
    for (std::size_t j = 0; j < r; ++j) {
      SparsePoly u(k);
      for (std::size_t i = 0; i < r; ++i) u -= evaluated[i].poly() * a_u_inv(j, i);
      if (!(u == assignment[pivots[j]])) {
        assignment[pivots[j]] = u;
        changed = true;
      }
    }
    if (!changed) break;
  }

  for (const auto& a : assignment) emb.embedding.emplace_back(a, truncation);
  emb.exact = false;
  return emb;
}

Jet restrict_to_x(const SparsePoly& f, const ChartEmbedding& emb) {
  std::vector<SparsePoly> assignment;
  assignment.reserve(emb.embedding.size());
  for (const auto& j : emb.embedding) assignment.push_back(j.poly());
  return substitute(f, assignment, emb.truncation);
}

RestrictedSystem restrict_system(const GraphChart& chart, unsigned truncation) {
  if (truncation < 1) {
    throw ContactError(ErrorCode::InvalidInput, "truncation must be >= 1");
  }
  const ChartEmbedding emb = embed_chart(chart, truncation);
  RestrictedSystem sys;
  sys.chart_vars = emb.x_coords;
  sys.truncation = truncation;
  sys.exact = emb.exact;
  for (const auto& f : chart.ambient_members()) {
    if (f.degree() > truncation) sys.exact = false;
    sys.members.push_back(restrict_to_x(f, emb));
  }
  return sys;
}

Scene validate_scene(Scene scene) {
  scene.dims.validate();
  for (auto& pt : scene.points) {
    if (!(pt.chart.dims == scene.dims)) {
      throw ContactError(ErrorCode::InvalidInput,
                         "point '" + pt.label + "': dimensions differ from the scene");
    }
    pt.chart = validate_chart(std::move(pt.chart));
  }
  return scene;
}

}  // namespace contact
