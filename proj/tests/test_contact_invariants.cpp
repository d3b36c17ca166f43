#include <doctest.h>

#include <functional>

#include "contact/contact_invariants.hpp"
#include "contact/error.hpp"
#include "contact/poly_text.hpp"
#include "random_gen.hpp"

using namespace contact;
using contact::testing::Gen;

namespace {

// Order data with the given sequence, built without the elimination code.
OrderData from_sequence(std::vector<unsigned> d) {
  OrderData od;
  od.d = d;
  od.corank = corank(d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i + 1 == d.size() || d[i + 1] != d[i]) {
      od.filtration_jumps.push_back({d[i], static_cast<unsigned>(i + 1)});
    }
  }
  od.adapted_transform = RationalMatrix::identity(d.size());
  return od;
}

// Pascal's triangle, independent of the binomial used by a_term.
BigInt pascal(unsigned n, unsigned k) {
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return k <= n ? row[k] : BigInt(0);
}

std::vector<SparsePoly> polys(const std::vector<std::string>& texts,
                              const std::vector<std::string>& vars) {
  std::vector<SparsePoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, vars));
  return out;
}

// Standard monomials of a monomial ideal: exponent vectors in a box that no
// generator divides.
unsigned staircase(const std::vector<Exponents>& gens, std::size_t k, unsigned box) {
  unsigned count = 0;
  Exponents e(k, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == k) {
      for (const auto& g : gens) {
        bool divides = true;
        for (std::size_t j = 0; j < k; ++j) divides = divides && g[j] <= e[j];
        if (divides) return;
      }
      ++count;
      return;
    }
    for (unsigned v = 0; v <= box; ++v) {
      e[i] = v;
      walk(i + 1);
    }
    e[i] = 0;
  };
  walk(0);
  return count;
}

Scene scene_of(Dimensions dims, std::vector<std::string> x, std::vector<std::string> graphs,
               std::vector<std::string> extra = {}) {
  Scene sc;
  sc.dims = dims;
  GraphChart ch;
  ch.dims = dims;
  ch.x_vars = std::move(x);
  ch.extra_y_vars = std::move(extra);
  ch.graph_fns = polys(graphs, ch.chart_vars());
  sc.points.push_back({"p", validate_chart(ch)});
  return validate_scene(sc);
}

}  // namespace

TEST_CASE("a_term and a_of") {
  CHECK(a_term({1, 2, 2}, 2) == 1);
  CHECK(a_term({4, 5, 3}, 2) == 1);
  CHECK(a_term({1, 2, 2}, 6) == 5);
  CHECK(a_term({1, 2, 2}, 1) == 0);
  CHECK(a_of({from_sequence({6, 3})}, {1, 2, 2}) == 7);
  CHECK(a_of({from_sequence({6, 3, 1})}, {2, 2, 3}) == 7);
  CHECK(a_of({from_sequence({1, 1}), from_sequence({1, 1})}, {2, 2, 2}) == 0);
}

TEST_CASE("a_term of order three is dim L + 1") {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned c = 1; c <= 6; ++c)
      for (unsigned m = 1; m < n + c; ++m) {
        const Dimensions dims{n, c, m};
        CHECK(a_term(dims, 3) == BigInt(dims.dim_l() + 1));
      }
}

TEST_CASE("a_term matches Pascal's triangle") {
  for (unsigned dl = 1; dl <= 8; ++dl)
    for (unsigned d = 2; d <= 12; ++d) {
      const Dimensions dims{dl, 1, 1};
      CHECK(a_term(dims, d) == pascal(dl + d - 2, d - 2));
    }
}

TEST_CASE("order_subsheaf_colength examples") {
  CHECK(order_subsheaf_colength({2, 2, 3}, from_sequence({6, 3, 1})) == 7);
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(order_subsheaf_colength({n, 2, 1}, from_sequence({2})) == 1);
  }
  CHECK(order_subsheaf_colength({2, 2, 3}, from_sequence({1, 1, 1})) == 0);
  CHECK(order_subsheaf_colength({1, 2, 2}, from_sequence({6, 3}), ColengthVariant::OrderOne) ==
        6 + 3);
}

TEST_CASE("colength equals the sum of a_term") {
  Gen gen(301);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = static_cast<unsigned>(gen.integer(1, 4));
    const unsigned c = static_cast<unsigned>(gen.integer(1, 4));
    const unsigned m = static_cast<unsigned>(gen.integer(1, static_cast<int>(n + c) - 1));
    const Dimensions dims{n, c, m};
    if (dims.dim_l() > 6) continue;
    std::vector<unsigned> d;
    for (unsigned j = 0; j < m; ++j) d.push_back(static_cast<unsigned>(gen.integer(1, 8)));
    std::sort(d.begin(), d.end(), std::greater<>());
    const OrderData od = from_sequence(d);
    CHECK(order_subsheaf_colength(dims, od) == a_of({od}, dims));
  }
}

TEST_CASE("count_monomials_below") {
  CHECK(count_monomials_below(1, 5) == 5);
  CHECK(count_monomials_below(2, 3) == 6);
  CHECK(count_monomials_below(3, 0) == 0);
  CHECK(count_monomials_below(4, 1) == 1);
}

TEST_CASE("local_length examples") {
  CHECK(local_length(polys({"x^3"}, {"x"})) == 3);
  CHECK(local_length(polys({"y3", "x^3"}, {"x", "y3"})) == 3);
  CHECK(local_length(polys({"x^2", "x*y", "y^2"}, {"x", "y"})) == 3);
  CHECK(local_length(polys({"x1^2", "x2^2"}, {"x1", "x2"})) == 4);
  CHECK(local_length(polys({"x", "y"}, {"x", "y"})) == 1);
  // (y - x^2, x^3): length 3, a non-monomial ideal
  CHECK(local_length(polys({"y - x^2", "x^3"}, {"x", "y"})) == 3);
  // units in the local ring kill nothing extra: x(1 + y) ~ x
  CHECK(local_length(polys({"x + x*y", "y^2"}, {"x", "y"})) == 2);
  const LengthResult r = local_length_detailed(polys({"x^3"}, {"x"}));
  CHECK(r.certified_degree == 3);
  CHECK(r.quotient_dims == std::vector<unsigned>{1, 2, 3, 3});
}

TEST_CASE("non-finite length is reported") {
  try {
    local_length(polys({"x^2"}, {"x", "y"}), {16});
    FAIL("expected an error");
  } catch (const ContactError& e) {
    CHECK(e.code() == ErrorCode::NotFiniteLength);
    CHECK(std::string(e.what()).find("positive-dimensional") != std::string::npos);
  }
  CHECK_THROWS_AS(local_length(polys({"x*y"}, {"x", "y"}), {12}), ContactError);
  CHECK_THROWS_AS(local_length(polys({"x + 1"}, {"x"})), ContactError);
}

TEST_CASE("local_length of monomial ideals counts the staircase") {
  Gen gen(303);
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Exponents> gens;
    // Pure powers keep the quotient finite.
    for (std::size_t j = 0; j < k; ++j) {
      Exponents e(k, 0);
      e[j] = static_cast<unsigned>(gen.integer(1, 5));
      gens.push_back(e);
    }
    for (int extra = gen.integer(0, 3); extra > 0; --extra) {
      Exponents e(k);
      for (auto& v : e) v = static_cast<unsigned>(gen.integer(0, 3));
      if (total_degree(e) > 0) gens.push_back(e);
    }
    std::vector<SparsePoly> ideal;
    for (const auto& e : gens) ideal.push_back(SparsePoly::monomial(e, gen.nonzero_rational()));
    CHECK(local_length(ideal) == staircase(gens, k, 6));
  }
}

TEST_CASE("local_length is invariant under linear changes of variables") {
  Gen gen(305);
  for (int i = 0; i < 40; ++i) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 2));
    std::vector<SparsePoly> ideal;
    for (std::size_t j = 0; j < k; ++j) {
      ideal.push_back(SparsePoly::monomial(
          [&] { Exponents e(k, 0); e[j] = static_cast<unsigned>(gen.integer(1, 4)); return e; }(),
          1));
    }
    ideal.push_back(gen.poly(k, 1, 3, 2));
    unsigned before;
    try {
      before = local_length(ideal);
    } catch (const ContactError&) {
      continue;
    }
    const RationalMatrix change = gen.invertible(k);
    std::vector<SparsePoly> assign;
    for (std::size_t r = 0; r < k; ++r) {
      SparsePoly lin(k);
      for (std::size_t l = 0; l < k; ++l) lin += SparsePoly::variable(k, l) * change(r, l);
      assign.push_back(lin);
    }
    std::vector<SparsePoly> moved;
    for (const auto& g : ideal) moved.push_back(substitute(g, assign, g.degree()).poly());
    CHECK(local_length(moved) == before);
  }
}

TEST_CASE("corank_length_check") {
  CHECK(corank_length_check(4, 2, from_sequence({2, 2})));
  CHECK(corank_length_check(1, 0, from_sequence({1, 1})));
  CHECK_FALSE(corank_length_check(5, 2, from_sequence({2, 2})));
  CHECK_THROWS_AS(corank_length_check(3, 2, from_sequence({6, 3})), ContactError);
}

TEST_CASE("projection_inequality") {
  const ContactReport ex3 = build_report(scene_of({1, 2, 2}, {"x"}, {"x^6", "x^3"}));
  CHECK(ex3.a_value == 7);
  CHECK_FALSE(projection_inequality(ex3).holds);
  CHECK(projection_inequality(ex3).margin == -5);

  for (unsigned m = 1; m <= 3; ++m) {
    std::vector<std::string> x, graphs;
    for (unsigned i = 1; i <= m; ++i) {
      x.push_back("x" + std::to_string(i));
      graphs.push_back("x" + std::to_string(i));
    }
    const ContactReport t = build_report(scene_of({m, m, m}, x, graphs));
    CHECK(t.a_value == 0);
    CHECK(projection_inequality(t).holds);
    CHECK(projection_inequality(t).margin == BigInt(m));
  }

  const ContactReport q = build_report(scene_of({2, 2, 2}, {"x1", "x2"}, {"x1^2", "x2^2"}));
  CHECK(q.points[0].order.d == std::vector<unsigned>{2, 2});
  CHECK(q.a_value == 2);
  CHECK(projection_inequality(q).holds);
  CHECK(projection_inequality(q).margin == 0);
  CHECK(q.points[0].local_length == 4u);
}

TEST_CASE("build_report on the bundled examples") {
  const ContactReport ex3 = build_report(scene_of({1, 2, 2}, {"x"}, {"x^6", "x^3"}));
  CHECK(ex3.points[0].local_length == 3u);
  CHECK(ex3.colength_oracle == ex3.a_value);
  CHECK_FALSE(ex3.inequality_holds);

  const ContactReport ex4 = build_report(scene_of({2, 2, 3}, {"x"}, {"x^6", "x^3"}, {"y3"}));
  CHECK(ex4.points[0].order.d == std::vector<unsigned>{6, 3, 1});
  CHECK(ex4.points[0].local_length == 3u);
  CHECK(ex4.a_value == 7);
  CHECK(ex4.colength_oracle == 7);
}

TEST_CASE("small contact in the quadratic regime forces orders at most two") {
  Gen gen(307);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const unsigned m = static_cast<unsigned>(gen.integer(1, 3));
    const unsigned n = static_cast<unsigned>(gen.integer(1, 3));
    const unsigned c = std::max(m, 2 * m > n ? 2 * m - n : 1u);
    const Dimensions dims{n, c, m};
    if (2 * m > n + c) continue;
    Scene sc;
    sc.dims = dims;
    GraphChart ch;
    ch.dims = dims;
    for (unsigned j = 0; j < dims.dim_l(); ++j) ch.x_vars.push_back("x" + std::to_string(j));
    const std::size_t k = ch.num_chart_vars();
    for (unsigned j = 0; j < m; ++j) ch.graph_fns.push_back(gen.poly(k, 1, 4, 2));
    for (unsigned j = 0; j < c - m; ++j) {
      ch.base_fns.push_back(SparsePoly::variable(k, k - 1 - j) + gen.poly(k, 2, 3, 1));
    }
    sc.points.push_back({"p", validate_chart(ch)});
    ContactReport rep;
    try {
      rep = build_report(sc, {{16, 256}, {10}});
    } catch (const ContactError&) {
      continue;
    }
    CHECK(rep.quadratic_regime);
    CHECK(rep.a_value == rep.colength_oracle);
    CHECK(rep.inequality_holds == (rep.a_value <= BigInt(m)));
    if (rep.inequality_holds) {
      ++checked;
      CHECK(rep.quadratic_ok);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("the 2^e length bound needs a general configuration") {
  // The quadric vanishes on the kernel of the linear part, so the fibre is
  // longer than 2^e although every order is at most two.
  const Scene sc = scene_of({2, 2, 2}, {"x1", "x2"},
                            {"1/2*x1^2 + 5*x1*x2 + 3/2*x2^2 - x1 - x2",
                             "-x1^2 - 5/2*x1*x2 - 3/2*x2^2"});
  const ContactReport rep = build_report(sc);
  const PointReport& p = rep.points[0];
  CHECK(p.order.d == std::vector<unsigned>{2, 1});
  CHECK(p.local_length == 3u);
  CHECK_FALSE(corank_length_check(*p.local_length, p.order.corank, p.order));
}
