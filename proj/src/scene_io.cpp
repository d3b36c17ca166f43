#include "contact/scene_io.hpp"

#include <fstream>

#include "contact/error.hpp"
#include "contact/poly_text.hpp"

namespace contact {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
  throw ContactError(ErrorCode::InvalidInput, field + ": " + msg);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

unsigned read_unsigned(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  const std::string field = where.empty() ? key : where + "." + key;
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(field, "expected a non-negative integer");
  return v.get<unsigned>();
}

std::vector<std::string> read_names(const Json& obj, const char* key, const std::string& where) {
  std::vector<std::string> out;
  const std::string field = where + "." + key;
  auto it = obj.find(key);
  if (it == obj.end()) return out;  // optional lists default to empty
  if (!it->is_array()) bad(field, "expected an array of names");
  for (std::size_t i = 0; i < it->size(); ++i) {
    if (!(*it)[i].is_string()) bad(field + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back((*it)[i].get<std::string>());
  }
  return out;
}

std::vector<SparsePoly> read_polys(const Json& obj, const char* key, const std::string& where,
                                   const std::vector<std::string>& vars) {
  std::vector<SparsePoly> out;
  const std::string field = where.empty() ? key : where + "." + key;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  if (!it->is_array()) bad(field, "expected an array of polynomial strings");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    if (!(*it)[i].is_string()) bad(f, "expected a polynomial string");
    try {
      out.push_back(parse_poly((*it)[i].get<std::string>(), vars));
    } catch (const ContactError& e) {
      throw ContactError(ErrorCode::Parse, f + ": " + e.what());
    }
  }
  return out;
}

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ContactError(ErrorCode::InvalidInput, "expected an integer");
}

// Prefixes the failing field onto errors raised while validating one point.
template <typename F>
auto with_field(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const ContactError& e) {
    throw ContactError(e.code(), field + ": " + e.what());
  }
}

}  // namespace

Scene scene_from_json(const Json& doc) {
  if (!doc.is_object()) bad("document", "expected a JSON object");
  Scene scene;
  scene.dims.n = read_unsigned(doc, "n", "");
  scene.dims.c = read_unsigned(doc, "c", "");
  scene.dims.m = read_unsigned(doc, "m", "");
  with_field("dims", [&] { scene.dims.validate(); return 0; });

  const Json& points = require(doc, "points", "");
  if (!points.is_array()) bad("points", "expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const Json& p = points[i];
    if (!p.is_object()) bad(where, "expected an object");
    ScenePoint pt;
    pt.label = p.contains("label") && p["label"].is_string() ? p["label"].get<std::string>()
                                                             : "p" + std::to_string(i + 1);
    GraphChart& ch = pt.chart;
    ch.dims = scene.dims;
    if (!p.contains("x_vars")) bad(where + ".x_vars", "missing field");
    ch.x_vars = read_names(p, "x_vars", where);
    ch.extra_y_vars = read_names(p, "extra_y_vars", where);
    const auto vars = ch.chart_vars();
    if (!p.contains("graph_fns")) bad(where + ".graph_fns", "missing field");
    ch.graph_fns = read_polys(p, "graph_fns", where, vars);
    ch.base_fns = read_polys(p, "base_fns", where, vars);
    pt.chart = with_field(where, [&] { return validate_chart(std::move(ch)); });
    scene.points.push_back(std::move(pt));
  }
  return scene;
}

Json scene_to_json(const Scene& scene) {
  Json doc{{"n", scene.dims.n}, {"c", scene.dims.c}, {"m", scene.dims.m}, {"points", Json::array()}};
  for (const auto& pt : scene.points) {
    const auto vars = pt.chart.chart_vars();
    Json p{{"label", pt.label}, {"x_vars", pt.chart.x_vars}, {"extra_y_vars", pt.chart.extra_y_vars}};
    p["graph_fns"] = Json::array();
    for (const auto& f : pt.chart.graph_fns) p["graph_fns"].push_back(format_poly(f, vars));
    p["base_fns"] = Json::array();
    for (const auto& f : pt.chart.base_fns) p["base_fns"].push_back(format_poly(f, vars));
    doc["points"].push_back(std::move(p));
  }
  return doc;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContactError(ErrorCode::InvalidInput, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ContactError(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

Scene load_scene(const std::filesystem::path& path) {
  return scene_from_json(load_json(path));
}

std::string deformation_point(const Json& doc) {
  if (doc.is_object() && doc.contains("point") && doc["point"].is_string()) {
    return doc["point"].get<std::string>();
  }
  return {};
}

Deformation deformation_from_json(const Json& doc, const GraphChart& chart) {
  if (!doc.is_object() || !doc.contains("g")) bad("g", "missing field");
  Deformation def;
  def.g = read_polys(doc, "g", "", chart.chart_vars());
  if (def.g.size() != chart.dims.m) {
    bad("g", "expected " + std::to_string(chart.dims.m) + " polynomials, got " +
                 std::to_string(def.g.size()));
  }
  return def;
}

Json order_data_to_json(const OrderData& od) {
  Json j;
  j["order_sequence"] = od.d;
  j["reduced_sequence"] = reduced_sequence(od);
  j["corank"] = od.corank;
  j["truncation"] = od.truncation;
  j["filtration_jumps"] = Json::array();
  for (const auto& s : od.filtration_jumps) {
    j["filtration_jumps"].push_back({{"order", s.order}, {"dimension", s.dimension}});
  }
  j["adapted_transform"] = Json::array();
  for (std::size_t r = 0; r < od.adapted_transform.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < od.adapted_transform.cols(); ++c) {
      row.push_back(format_rational(od.adapted_transform(r, c)));
    }
    j["adapted_transform"].push_back(std::move(row));
  }
  return j;
}

OrderData order_data_from_json(const Json& j) {
  OrderData od;
  od.d = j.at("order_sequence").get<std::vector<unsigned>>();
  od.corank = j.at("corank").get<unsigned>();
  od.truncation = j.value("truncation", 0u);
  for (const auto& s : j.at("filtration_jumps")) {
    od.filtration_jumps.push_back({s.at("order").get<unsigned>(), s.at("dimension").get<unsigned>()});
  }
  const Json& t = j.at("adapted_transform");
  const std::size_t rows = t.size();
  const std::size_t cols = rows ? t[0].size() : 0;
  od.adapted_transform = RationalMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      od.adapted_transform(r, c) = parse_rational(t[r][c].get<std::string>());
  return od;
}

Json report_to_json(const ContactReport& report) {
  Json j;
  j["dims"] = {{"n", report.dims.n}, {"c", report.dims.c}, {"m", report.dims.m},
               {"dim_l", report.dims.dim_l()}};
  j["points"] = Json::array();
  for (const auto& pt : report.points) {
    Json p = order_data_to_json(pt.order);
    p["label"] = pt.label;
    p["local_length"] = pt.local_length ? Json(*pt.local_length) : Json(nullptr);
    if (!pt.length_note.empty()) p["length_note"] = pt.length_note;
    p["a_contribution"] = bigint_to_json(pt.a_contribution);
    p["colength"] = bigint_to_json(pt.colength);
    j["points"].push_back(std::move(p));
  }
  const InequalityVerdict v = projection_inequality(report);
  j["a_value"] = bigint_to_json(report.a_value);
  j["colength_oracle"] = bigint_to_json(report.colength_oracle);
  j["m"] = report.dims.m;
  j["inequality_holds"] = report.inequality_holds;
  j["margin"] = bigint_to_json(v.margin);
  j["quadratic_regime"] = report.quadratic_regime;
  j["quadratic_ok"] = report.quadratic_ok;
  return j;
}

ContactReport report_from_json(const Json& j) {
  ContactReport rep;
  const Json& dims = j.at("dims");
  rep.dims = {dims.at("n").get<unsigned>(), dims.at("c").get<unsigned>(), dims.at("m").get<unsigned>()};
  for (const auto& p : j.at("points")) {
    PointReport pr;
    pr.label = p.at("label").get<std::string>();
    pr.order = order_data_from_json(p);
    if (!p.at("local_length").is_null()) pr.local_length = p.at("local_length").get<unsigned>();
    pr.length_note = p.value("length_note", std::string());
    pr.a_contribution = bigint_from_json(p.at("a_contribution"));
    pr.colength = bigint_from_json(p.at("colength"));
    rep.points.push_back(std::move(pr));
  }
  rep.a_value = bigint_from_json(j.at("a_value"));
  rep.colength_oracle = bigint_from_json(j.at("colength_oracle"));
  rep.inequality_holds = j.at("inequality_holds").get<bool>();
  rep.quadratic_regime = j.at("quadratic_regime").get<bool>();
  rep.quadratic_ok = j.at("quadratic_ok").get<bool>();
  return rep;
}

Json bound_row_to_json(const BoundRow& row, unsigned digits) {
  Json witness = row.integer_max.witness;
  return Json{{"n", row.n},
              {"integer_max", bigint_to_json(row.integer_max.value)},
              {"witness", witness},
              {"zeros", row.integer_max.zeros},
              {"analytic_bound", to_decimal(row.analytic.value, digits)},
              {"branch", to_string(row.analytic.branch)},
              {"lower_bound", to_decimal(row.lower_bound, digits)}};
}

}  // namespace contact
