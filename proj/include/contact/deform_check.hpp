#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact/chart_model.hpp"
#include "contact/linalg.hpp"
#include "contact/order_seq.hpp"

namespace contact {

// First-order motion of L: y_i moves to y_i + sigma * eps * g_i, with
// g_i in the chart variables (x_vars then extra_y_vars).
struct Deformation {
  std::vector<SparsePoly> g;
};

// Which way g enters the moved equations.
//   Moving (default): y_i + eps g_i; a point of X n L moves to chart
//     coordinate eps a with g_i + a.grad f_i = 0 mod m^{d_i}. This is the
//     convention under which the worked (x^6, x^3) example moves the point
//     to x = -eps.
//   Reversed: y_i - eps g_i; tangency reads a.grad f_i(0) = g_i(0) and
//     the congruence g_i - a.grad f_i = 0 mod m^{d_i}.
enum class SignConvention { Moving, Reversed };

int sigma(SignConvention s);

// a: motion of the point in the chart variables; b: its y-component.
struct TangentVector {
  std::vector<Rational> a;
  std::vector<Rational> b;
};

// Exact linear system over the unknowns (a_1..a_k, b_1..b_m):
//   b_i = -sigma g_i(0)         point stays on the moved L
//   b_i = a . grad f_i(0)       point stays on X (graph part)
//   a . grad f_k(0) = 0         point stays on X (base part)
struct LinearSystem {
  std::vector<std::string> unknowns;
  RationalMatrix coefficients;
  std::vector<Rational> rhs;
};

LinearSystem tangency_system(const GraphChart& chart, const Deformation& def,
                             SignConvention sign = SignConvention::Moving);

std::optional<TangentVector> solve_tangency(const GraphChart& chart, const Deformation& def,
                                            SignConvention sign = SignConvention::Moving);

struct NecessaryReport {
  bool ok = true;
  std::vector<Order> orders;      // order on X of the adapted-frame g_i
  std::vector<unsigned> required; // d_i - 1
};

// ord(g_i) >= d_i - 1 for the adapted-frame deformation restricted to X.
NecessaryReport necessary_check(const GraphChart& chart, const OrderData& od,
                                const Deformation& def);

struct SufficiencyReport {
  bool ok = false;
  bool necessary_ok = false;
  std::optional<TangentVector> witness;
};

// Looks for a with g_i + sigma a.grad f_i = 0 mod m^{d_i} on X for every
// adapted slot (degree 0 of which is the tangency system) by an exact
// linear solve; the witness is the solution with free coordinates at zero.
SufficiencyReport sufficiency_check(const GraphChart& chart, const OrderData& od,
                                    const Deformation& def,
                                    SignConvention sign = SignConvention::Moving);

// Dual-number check: expands (f_i + sigma eps g_i)(w + eps a) in the adapted
// frame on X and confirms every slot has order exactly d_i at w = 0.
bool transport_verify(const GraphChart& chart, const OrderData& od, const Deformation& def,
                      const std::vector<Rational>& a,
                      SignConvention sign = SignConvention::Moving);

}  // namespace contact
