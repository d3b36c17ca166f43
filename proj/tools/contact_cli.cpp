// contact: order sequences, contact invariants, fibre bounds and first-order
// deformation checks for local models of a variety meeting a linear space.
//
// Exit codes: 0 success, 2 input error, 3 computation error.

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "contact/contact_invariants.hpp"
#include "contact/deform_check.hpp"
#include "contact/error.hpp"
#include "contact/fibre_bounds.hpp"
#include "contact/order_seq.hpp"
#include "contact/poly_text.hpp"
#include "contact/scene_io.hpp"

namespace {

using namespace contact;

constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

struct RunConfig {
  unsigned truncation = 16;
  unsigned max_truncation = 256;
  bool json = false;
  unsigned precision = kDefaultDigits;
  bool alt_sign = false;

  void validate() const {
    if (truncation < 1 || truncation > max_truncation || max_truncation > 256) {
      throw ContactError(ErrorCode::InvalidInput,
                         "--truncation/--max-truncation: need 1 <= truncation <= max <= 256");
    }
    if (precision < 30) throw ContactError(ErrorCode::InvalidInput, "--precision: need >= 30 digits");
  }

  TruncationPolicy policy() const { return {truncation, max_truncation}; }
};

std::string join(const std::vector<unsigned>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::string matrix_text(const RationalMatrix& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < t.rows(); ++r) {
    out << (r ? "; " : "");
    for (std::size_t c = 0; c < t.cols(); ++c) out << (c ? " " : "") << format_rational(t(r, c));
  }
  out << ']';
  return out.str();
}

int cmd_order_seq(const std::string& path, const RunConfig& cfg) {
  const Scene scene = load_scene(path);
  Json out = Json::array();
  for (const auto& pt : scene.points) {
    const OrderData od = order_sequence_for_chart(pt.chart, cfg.policy());
    if (cfg.json) {
      Json j = order_data_to_json(od);
      j["label"] = pt.label;
      out.push_back(std::move(j));
    } else {
      std::cout << pt.label << ": d=" << join(od.d) << " e=" << od.corank
                << " reduced=" << join(reduced_sequence(od)) << " adapted=" << matrix_text(od.adapted_transform)
                << " truncation=" << od.truncation << '\n';
    }
  }
  if (cfg.json) std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_invariants(const std::string& path, const RunConfig& cfg) {
  const Scene scene = load_scene(path);
  ReportOptions opts;
  opts.truncation = cfg.policy();
  const ContactReport rep = build_report(scene, opts);
  for (const auto& pt : rep.points) {
    if (!pt.local_length) std::cerr << "warning: " << pt.label << ": local length UNKNOWN: " << pt.length_note << '\n';
  }
  if (cfg.json) {
    std::cout << report_to_json(rep).dump(2) << '\n';
    return 0;
  }
  const auto& d = rep.dims;
  std::cout << "n=" << d.n << " c=" << d.c << " m=" << d.m << " dim L=" << d.dim_l() << '\n';
  std::cout << std::left << std::setw(10) << "point" << std::setw(16) << "order seq" << std::setw(8) << "corank"
            << std::setw(10) << "length" << std::setw(8) << "a_p" << "colength\n";
  for (const auto& pt : rep.points) {
    std::cout << std::setw(10) << pt.label << std::setw(16) << join(pt.order.d) << std::setw(8) << pt.order.corank
              << std::setw(10) << (pt.local_length ? std::to_string(*pt.local_length) : "UNKNOWN")
              << std::setw(8) << pt.a_contribution.get_str() << pt.colength.get_str() << '\n';
  }
  const InequalityVerdict v = projection_inequality(rep);
  std::cout << "a(X,L)=" << rep.a_value.get_str() << " colength=" << rep.colength_oracle.get_str()
            << " m=" << d.m << " inequality " << (v.holds ? "holds" : "fails")
            << " (margin " << v.margin.get_str() << ")\n";
  if (rep.quadratic_regime) {
    std::cout << "2m <= n+c: all orders <= 2 " << (rep.quadratic_ok ? "yes" : "NO") << '\n';
  }
  return 0;
}

int cmd_bounds(unsigned first, unsigned last, bool crossover, unsigned enum_bound, const RunConfig& cfg) {
  if (crossover) {
    const CrossoverReport rep = crossover_report(first, last, cfg.precision);
    if (cfg.json) {
      Json j{{"crossover", rep.crossover ? Json(*rep.crossover) : Json(nullptr)},
             {"claimed_last_linear", rep.claimed_last_linear},
             {"agrees_with_claim", rep.agrees_with_claim},
             {"rows", Json::array()}};
      for (const auto& r : rep.rows) {
        j["rows"].push_back({{"n", r.n}, {"branch", to_string(r.branch)},
                             {"exponential_term", to_decimal(r.exponential_term, cfg.precision)},
                             {"linear_term", to_decimal(r.linear_term, cfg.precision)}});
      }
      std::cout << j.dump(2) << '\n';
    } else {
      for (const auto& r : rep.rows) {
        std::cout << std::setw(5) << r.n << "  " << std::setw(12) << to_string(r.branch)
                  << "  2^sqrt(n)+n-1=" << to_decimal(r.exponential_term, 12)
                  << "  1+2sqrt(2)(n-1)=" << to_decimal(r.linear_term, 12) << '\n';
      }
      if (rep.crossover) {
        std::cout << "exponential branch dominates from n=" << *rep.crossover << "; claimed linear for n<="
                  << rep.claimed_last_linear << ": " << (rep.agrees_with_claim ? "agrees" : "DISAGREES") << '\n';
      } else {
        std::cout << "linear branch still dominates at the end of the range\n";
      }
    }
    return 0;
  }

  const auto rows = first <= last ? bound_table(first, last, cfg.precision, enum_bound) : std::vector<BoundRow>{};
  if (cfg.json) {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(bound_row_to_json(r, cfg.precision));
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << std::left << std::setw(6) << "n" << std::setw(12) << "integer_max" << std::setw(18) << "witness"
            << std::setw(24) << "analytic_bound" << std::setw(13) << "branch" << "lower_bound\n";
  for (const auto& r : rows) {
    std::vector<unsigned> w = r.integer_max.witness;
    std::string witness = join(w) + (r.integer_max.zeros ? "+" + std::to_string(r.integer_max.zeros) + "x0" : "");
    std::cout << std::setw(6) << r.n << std::setw(12) << r.integer_max.value.get_str() << std::setw(18) << witness
              << std::setw(24) << to_decimal(r.analytic.value, 20) << std::setw(13) << to_string(r.analytic.branch)
              << to_decimal(r.lower_bound, 20) << '\n';
  }
  return 0;
}

int cmd_deform(const std::string& scene_path, const std::string& def_path, const RunConfig& cfg) {
  const Scene scene = load_scene(scene_path);
  const Json doc = load_json(def_path);
  const std::string label = deformation_point(doc);
  const ScenePoint* pt = nullptr;
  for (const auto& p : scene.points) {
    if (label.empty() || p.label == label) {
      pt = &p;
      break;
    }
  }
  if (!pt) throw ContactError(ErrorCode::InvalidInput, "point: no point labelled '" + label + "'");
  const Deformation def = deformation_from_json(doc, pt->chart);
  const SignConvention sign = cfg.alt_sign ? SignConvention::Reversed : SignConvention::Moving;

  const OrderData od = order_sequence_for_chart(pt->chart, cfg.policy());
  const NecessaryReport nec = necessary_check(pt->chart, od, def);
  const SufficiencyReport suf = sufficiency_check(pt->chart, od, def, sign);
  const bool transported = suf.witness && transport_verify(pt->chart, od, def, suf.witness->a, sign);

  const auto vars = pt->chart.chart_vars();
  if (cfg.json) {
    Json j{{"point", pt->label}, {"order_sequence", od.d}, {"necessary", nec.ok},
           {"sufficient", suf.ok}, {"transport_verified", transported},
           {"convention", cfg.alt_sign ? "reversed" : "moving"}};
    j["g_orders"] = Json::array();
    for (const auto& o : nec.orders) j["g_orders"].push_back(to_string(o));
    if (suf.witness) {
      Json a = Json::object();
      for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = format_rational(suf.witness->a[i]);
      j["witness_a"] = a;
      Json b = Json::array();
      for (const auto& v : suf.witness->b) b.push_back(format_rational(v));
      j["witness_b"] = b;
    } else {
      j["witness_a"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << pt->label << ": d=" << join(od.d) << '\n';
  std::cout << "necessary (ord g_i >= d_i - 1): " << (nec.ok ? "yes" : "no") << '\n';
  std::cout << "sufficient: " << (suf.ok ? "yes" : "no") << '\n';
  if (suf.witness) {
    std::cout << "witness a:";
    for (std::size_t i = 0; i < vars.size(); ++i) std::cout << ' ' << vars[i] << '=' << format_rational(suf.witness->a[i]);
    std::cout << "\ntransport check at the moved point: " << (transported ? "orders preserved" : "FAILED") << '\n';
  }
  return 0;
}

int cmd_length(const std::vector<std::string>& vars, const std::vector<std::string>& gens, unsigned max_degree,
               const RunConfig& cfg) {
  std::vector<SparsePoly> polys;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      polys.push_back(parse_poly(gens[i], vars));
    } catch (const ContactError& e) {
      throw ContactError(e.code(), "generator[" + std::to_string(i) + "]: " + e.what());
    }
  }
  const LengthResult res = local_length_detailed(polys, {max_degree});
  if (cfg.json) {
    std::cout << Json{{"length", res.length}, {"certified_degree", res.certified_degree},
                      {"quotient_dims", res.quotient_dims}}.dump(2)
              << '\n';
  } else {
    std::cout << "local length " << res.length << " (m^" << res.certified_degree << " in ideal)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contact invariants of a variety and a linear space"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--truncation", cfg.truncation, "initial jet truncation degree");
    sub->add_option("--max-truncation", cfg.max_truncation, "largest truncation tried");
    sub->add_flag("--json", cfg.json, "emit JSON");
  };

  std::string scene_path, def_path;
  auto* order_cmd = app.add_subcommand("order-seq", "order sequences, adapted bases and coranks");
  order_cmd->add_option("scene", scene_path, "scene JSON file")->required();
  add_common(order_cmd);

  auto* inv_cmd = app.add_subcommand("invariants", "a(X,L), colength, local lengths, inequality verdict");
  inv_cmd->add_option("scene", scene_path, "scene JSON file")->required();
  add_common(inv_cmd);

  unsigned first = 1, last = 10, single = 0, enum_bound = kDefaultEnumerationBound;
  bool crossover = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "fibre-length bound table");
  bounds_cmd->add_option("--from", first, "first n");
  bounds_cmd->add_option("--to", last, "last n");
  bounds_cmd->add_option("-n", single, "single n");
  bounds_cmd->add_option("--enum-bound", enum_bound, "largest n for exhaustive enumeration");
  bounds_cmd->add_option("--precision", cfg.precision, "decimal digits for real arithmetic");
  bounds_cmd->add_flag("--crossover", crossover, "report which analytic branch dominates");
  bounds_cmd->add_flag("--json", cfg.json, "emit JSON");

  auto* deform_cmd = app.add_subcommand("deform", "first-order order-preserving deformation check");
  deform_cmd->add_option("scene", scene_path, "scene JSON file")->required();
  deform_cmd->add_option("deformation", def_path, "deformation JSON file")->required();
  deform_cmd->add_flag("--alt-sign", cfg.alt_sign, "use the y - eps g sign convention");
  add_common(deform_cmd);

  std::string var_list;
  std::vector<std::string> gens;
  unsigned max_degree = 32;
  auto* length_cmd = app.add_subcommand("length", "local length of an ideal at the origin");
  length_cmd->add_option("--vars", var_list, "comma-separated variable names")->required();
  length_cmd->add_option("generators", gens, "ideal generators")->required();
  length_cmd->add_option("--max-degree", max_degree, "stabilization search bound");
  length_cmd->add_flag("--json", cfg.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    cfg.validate();
    if (order_cmd->parsed()) return cmd_order_seq(scene_path, cfg);
    if (inv_cmd->parsed()) return cmd_invariants(scene_path, cfg);
    if (bounds_cmd->parsed()) {
      if (single) first = last = single;
      return cmd_bounds(first, last, crossover, enum_bound, cfg);
    }
    if (deform_cmd->parsed()) return cmd_deform(scene_path, def_path, cfg);
    if (length_cmd->parsed()) {
      std::vector<std::string> vars;
      std::stringstream ss(var_list);
      for (std::string v; std::getline(ss, v, ',');) {
        if (!v.empty()) vars.push_back(v);
      }
      return cmd_length(vars, gens, max_degree, cfg);
    }
  } catch (const ContactError& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.is_input_error() ? kExitInput : kExitCompute;
  }
  return 0;
}
