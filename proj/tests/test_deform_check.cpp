#include <doctest.h>

#include "contact/deform_check.hpp"
#include "contact/error.hpp"
#include "contact/poly_text.hpp"
#include "random_gen.hpp"

using namespace contact;
using contact::testing::Gen;

namespace {

GraphChart make_chart(Dimensions dims, std::vector<std::string> x, std::vector<std::string> graphs,
                      std::vector<std::string> bases = {}) {
  GraphChart ch;
  ch.dims = dims;
  ch.x_vars = std::move(x);
  for (const auto& g : graphs) ch.graph_fns.push_back(parse_poly(g, ch.x_vars));
  for (const auto& b : bases) ch.base_fns.push_back(parse_poly(b, ch.x_vars));
  return validate_chart(ch);
}

GraphChart chart3dim() { return make_chart({1, 2, 2}, {"x"}, {"x^6", "x^3"}); }

Deformation def(const GraphChart& ch, std::vector<std::string> g) {
  Deformation d;
  for (const auto& s : g) d.g.push_back(parse_poly(s, ch.chart_vars()));
  return d;
}

std::vector<Rational> vec(std::vector<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("worked example") {
  const GraphChart ch = chart3dim();
  const OrderData od = order_sequence_for_chart(ch);
  const Deformation g = def(ch, {"6*x^5", "3*x^2"});

  const NecessaryReport nec = necessary_check(ch, od, g);
  CHECK(nec.ok);
  CHECK(nec.orders == std::vector<Order>{Order::finite(5), Order::finite(2)});
  CHECK(nec.required == std::vector<unsigned>{5, 2});

  const SufficiencyReport suf = sufficiency_check(ch, od, g);
  CHECK(suf.ok);
  REQUIRE(suf.witness.has_value());
  CHECK(suf.witness->a == vec({-1}));
  CHECK(suf.witness->b == vec({0, 0}));

  CHECK(transport_verify(ch, od, g, vec({-1})));
  CHECK_FALSE(transport_verify(ch, od, g, vec({1})));
}

TEST_CASE("worked example under the alternate sign") {
  const GraphChart ch = chart3dim();
  const OrderData od = order_sequence_for_chart(ch);
  const Deformation g = def(ch, {"6*x^5", "3*x^2"});
  const SufficiencyReport suf = sufficiency_check(ch, od, g, SignConvention::Reversed);
  REQUIRE(suf.ok);
  CHECK(suf.witness->a == vec({1}));
  CHECK(transport_verify(ch, od, g, vec({1}), SignConvention::Reversed));
}

TEST_CASE("deformations that move the orders") {
  const GraphChart ch = chart3dim();
  const OrderData od = order_sequence_for_chart(ch);

  const Deformation perturbed = def(ch, {"x^5", "3*x^2"});
  CHECK(necessary_check(ch, od, perturbed).ok);
  const SufficiencyReport s = sufficiency_check(ch, od, perturbed);
  CHECK(s.necessary_ok);
  CHECK_FALSE(s.ok);
  CHECK_FALSE(transport_verify(ch, od, perturbed, vec({-1})));

  const Deformation constant = def(ch, {"1", "0"});
  const NecessaryReport nec = necessary_check(ch, od, constant);
  CHECK_FALSE(nec.ok);
  CHECK(nec.orders[0] == Order::finite(0));
  CHECK_FALSE(sufficiency_check(ch, od, constant).necessary_ok);

  const Deformation zero = def(ch, {"0", "0"});
  CHECK(necessary_check(ch, od, zero).ok);
  const SufficiencyReport z = sufficiency_check(ch, od, zero);
  CHECK(z.ok);
  CHECK(z.witness->a == vec({0}));
  CHECK(transport_verify(ch, od, zero, vec({0})));
}

TEST_CASE("tangency systems") {
  const GraphChart ex = chart3dim();
  const auto free_a = solve_tangency(ex, def(ex, {"6*x^5", "3*x^2"}));
  REQUIRE(free_a.has_value());
  CHECK(free_a->a == vec({0}));
  CHECK(free_a->b == vec({0, 0}));
  CHECK(tangency_system(ex, def(ex, {"0", "0"})).unknowns ==
        std::vector<std::string>{"x", "b1", "b2"});

  const GraphChart tr = make_chart({2, 2, 2}, {"x1", "x2"}, {"x1", "x2"});
  const auto moving = solve_tangency(tr, def(tr, {"1", "0"}));
  REQUIRE(moving.has_value());
  CHECK(moving->a == vec({-1, 0}));
  CHECK(moving->b == vec({-1, 0}));
  const auto literal = solve_tangency(tr, def(tr, {"1", "0"}), SignConvention::Reversed);
  REQUIRE(literal.has_value());
  CHECK(literal->a == vec({1, 0}));

  const GraphChart based = make_chart({1, 2, 1}, {"x1", "x2"}, {"x2^2 + x1"}, {"x1"});
  const auto pinned = solve_tangency(based, def(based, {"1"}));
  // x1 = 0 on X while the graph needs a1 = -1: no tangent motion
  CHECK_FALSE(pinned.has_value());
  const auto flat = solve_tangency(based, def(based, {"0"}));
  REQUIRE(flat.has_value());
  CHECK(flat->a[0] == 0);
}

TEST_CASE("deformations on a curved base") {
  // X = {u = v^2}, member v^3 + u v restricts to 2 v^3.
  const GraphChart ch = make_chart({1, 2, 1}, {"u", "v"}, {"v^3 + u*v"}, {"u - v^2"});
  const OrderData od = order_sequence_for_chart(ch);
  REQUIRE(od.d == std::vector<unsigned>{3});

  const Deformation g = def(ch, {"-6*v^2"});
  const SufficiencyReport s = sufficiency_check(ch, od, g);
  REQUIRE(s.ok);
  CHECK(s.witness->a == vec({0, 1}));
  CHECK(transport_verify(ch, od, g, s.witness->a));
  // not tangent to X
  CHECK_FALSE(transport_verify(ch, od, g, vec({1, 1})));

  // -6 u restricts to -6 v^2 as well
  CHECK(sufficiency_check(ch, od, def(ch, {"-6*u"})).ok);
  CHECK_FALSE(sufficiency_check(ch, od, def(ch, {"v"})).necessary_ok);
}

TEST_CASE("wrong-sized deformations are rejected") {
  const GraphChart ch = chart3dim();
  const OrderData od = order_sequence_for_chart(ch);
  CHECK_THROWS_AS(necessary_check(ch, od, def(ch, {"x"})), ContactError);
  CHECK_THROWS_AS(transport_verify(ch, od, def(ch, {"0", "0"}), vec({0, 0})), ContactError);
}

namespace {

struct Instance {
  GraphChart chart;
  OrderData od;
};

Instance random_instance(Gen& gen) {
  for (;;) {
    const unsigned k = static_cast<unsigned>(gen.integer(1, 2));
    const unsigned m = static_cast<unsigned>(gen.integer(1, 2));
    GraphChart ch;
    ch.dims = {k, m, m};  // dim L = k
    for (unsigned j = 0; j < k; ++j) ch.x_vars.push_back("x" + std::to_string(j + 1));
    for (unsigned j = 0; j < m; ++j) ch.graph_fns.push_back(gen.poly(k, 1, 5, 3));
    try {
      ch = validate_chart(ch);
      return {ch, order_sequence_for_chart(ch)};
    } catch (const ContactError&) {
    }
  }
}

// g_i = -sigma a.grad f_i plus terms of degree >= d_1: passes by construction.
Deformation passing(Gen& gen, const Instance& in, const std::vector<Rational>& a,
                    SignConvention sign) {
  const std::size_t k = in.chart.num_chart_vars();
  Deformation d;
  for (const auto& f : in.chart.graph_fns) {
    SparsePoly g(k);
    for (std::size_t l = 0; l < k; ++l) g += f.derivative(l) * (-sigma(sign) * a[l]);
    g += gen.poly(k, in.od.d.front(), in.od.d.front() + 2, 2);
    d.g.push_back(g);
  }
  return d;
}

std::vector<Rational> random_a(Gen& gen, std::size_t k) {
  std::vector<Rational> a;
  for (std::size_t l = 0; l < k; ++l) a.push_back(gen.rational());
  return a;
}

}  // namespace

TEST_CASE("sufficiency implies necessity and agrees with transport") {
  Gen gen(401);
  int sufficient = 0;
  for (int i = 0; i < 150; ++i) {
    const Instance in = random_instance(gen);
    const std::size_t k = in.chart.num_chart_vars();
    const SignConvention sign = gen.coin() ? SignConvention::Moving : SignConvention::Reversed;
    Deformation d;
    if (gen.coin()) {
      d = passing(gen, in, random_a(gen, k), sign);
    } else {
      for (std::size_t j = 0; j < in.chart.dims.m; ++j) d.g.push_back(gen.poly(k, 0, 5, 2));
    }
    const SufficiencyReport s = sufficiency_check(in.chart, in.od, d, sign);
    if (s.ok) {
      ++sufficient;
      CHECK(s.necessary_ok);
      CHECK(necessary_check(in.chart, in.od, d).ok);
      CHECK(transport_verify(in.chart, in.od, d, s.witness->a, sign));
    }
  }
  CHECK(sufficient > 50);
}

TEST_CASE("transverse charts accept every deformation") {
  Gen gen(403);
  for (int i = 0; i < 60; ++i) {
    const unsigned k = static_cast<unsigned>(gen.integer(1, 3));
    GraphChart ch;
    ch.dims = {k, k, k};
    for (unsigned j = 0; j < k; ++j) ch.x_vars.push_back("x" + std::to_string(j + 1));
    const RationalMatrix lin = gen.invertible(k);
    for (unsigned j = 0; j < k; ++j) {
      SparsePoly f = gen.poly(k, 2, 4, 2);
      for (unsigned l = 0; l < k; ++l) f += SparsePoly::variable(k, l) * lin(j, l);
      ch.graph_fns.push_back(f);
    }
    ch = validate_chart(ch);
    const OrderData od = order_sequence_for_chart(ch);
    Deformation d;
    for (unsigned j = 0; j < k; ++j) d.g.push_back(gen.poly(k, 0, 4, 3));
    CHECK(necessary_check(ch, od, d).ok);
    const SufficiencyReport s = sufficiency_check(ch, od, d);
    REQUIRE(s.ok);
    CHECK(transport_verify(ch, od, d, s.witness->a));
  }
}

TEST_CASE("passing deformations add") {
  Gen gen(405);
  for (int i = 0; i < 80; ++i) {
    const Instance in = random_instance(gen);
    const std::size_t k = in.chart.num_chart_vars();
    const auto a1 = random_a(gen, k);
    const auto a2 = random_a(gen, k);
    const Deformation d1 = passing(gen, in, a1, SignConvention::Moving);
    const Deformation d2 = passing(gen, in, a2, SignConvention::Moving);
    REQUIRE(transport_verify(in.chart, in.od, d1, a1));
    REQUIRE(transport_verify(in.chart, in.od, d2, a2));
    Deformation sum;
    std::vector<Rational> a;
    for (std::size_t j = 0; j < d1.g.size(); ++j) sum.g.push_back(d1.g[j] + d2.g[j]);
    for (std::size_t l = 0; l < k; ++l) a.push_back(a1[l] + a2[l]);
    CHECK(transport_verify(in.chart, in.od, sum, a));
    CHECK(sufficiency_check(in.chart, in.od, sum).ok);
  }
}
