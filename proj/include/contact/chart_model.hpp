#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "contact/exact_poly.hpp"

namespace contact {

// n = dim X, c = codim X in P^{n+c}, m = codim L.
struct Dimensions {
  unsigned n = 1;
  unsigned c = 1;
  unsigned m = 1;

  unsigned ambient() const { return n + c; }
  unsigned dim_l() const { return n + c - m; }
  bool tall() const { return c < m; }  // dim X > dim L

  // Throws InvalidInput unless n >= 1, c >= 1, 1 <= m <= n+c-1.
  void validate() const;

  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

// Local model of (X, L, p) with p at the origin. L is {y_1 = ... = y_m = 0};
// X is the graph y_i = f_i (i <= min(m,c)) over the locus cut out in the
// chart by base_fns (m <= c), or over all of L with extra coordinates
// y_{c+1..m} (c < m).
//
// Polynomials are in the chart variables x_vars followed by extra_y_vars.
struct GraphChart {
  Dimensions dims;
  std::vector<std::string> x_vars;
  std::vector<std::string> extra_y_vars;
  std::vector<SparsePoly> graph_fns;
  std::vector<SparsePoly> base_fns;

  std::vector<std::string> chart_vars() const;
  std::size_t num_chart_vars() const { return x_vars.size() + extra_y_vars.size(); }

  // The m linear equations of L as functions in the chart variables:
  // the graph functions followed by the extra y coordinates.
  std::vector<SparsePoly> ambient_members() const;
};

// Checks counts and variable sets, vanishing at the origin (NonVanishing) and
// independence of the base_fns linear parts (NonTransverseBase). Returns the
// chart unchanged on success.
GraphChart validate_chart(GraphChart chart);

// Parametrization of X near p: X is the image of its local coordinates under
// `embedding`, one jet per chart variable. Base functions are eliminated by
// solving for pivot chart variables as power series in the free ones.
struct ChartEmbedding {
  std::vector<std::string> x_coords;       // local coordinates on X
  std::vector<std::size_t> free_vars;      // chart-variable index of each X coordinate
  std::vector<Jet> embedding;              // one per chart variable, in X coordinates
  unsigned truncation = 0;
  bool exact = true;                       // embedding is polynomial (no elimination)
};

ChartEmbedding embed_chart(const GraphChart& chart, unsigned truncation);

// Restriction to X of a function given in the chart variables.
Jet restrict_to_x(const SparsePoly& f, const ChartEmbedding& emb);

struct RestrictedSystem {
  std::vector<std::string> chart_vars;  // local coordinates on X
  std::vector<Jet> members;             // exactly m jets
  unsigned truncation = 0;
  // Members are the true restrictions (not truncated series): no base
  // elimination happened and every member has degree <= truncation.
  bool exact = false;
};

RestrictedSystem restrict_system(const GraphChart& chart, unsigned truncation);

struct ScenePoint {
  std::string label;
  GraphChart chart;
};

struct Scene {
  Dimensions dims;
  std::vector<ScenePoint> points;
};

// Validates every chart and that all share the scene dimensions.
Scene validate_scene(Scene scene);

}  // namespace contact
