#include <doctest.h>

#include "contact/error.hpp"
#include "contact/scene_io.hpp"

using namespace contact;

namespace {

const char* kEx3 = R"({"n":1,"c":2,"m":2,"points":[
  {"label":"origin","x_vars":["x"],"graph_fns":["x^6","x^3"]}]})";

const char* kEx4 = R"({"n":2,"c":2,"m":3,"points":[
  {"label":"origin","x_vars":["x"],"extra_y_vars":["y3"],"graph_fns":["x^6","x^3"]}]})";

std::string error_of(const char* text) {
  try {
    scene_from_json(Json::parse(text));
  } catch (const ContactError& e) {
    return e.what();
  }
  return {};
}

bool mentions(const std::string& msg, const char* what) {
  return msg.find(what) != std::string::npos;
}

}  // namespace

TEST_CASE("scenes load from JSON") {
  const Scene s3 = scene_from_json(Json::parse(kEx3));
  CHECK(s3.dims == Dimensions{1, 2, 2});
  REQUIRE(s3.points.size() == 1);
  CHECK(s3.points[0].label == "origin");
  CHECK(s3.points[0].chart.graph_fns.size() == 2);

  const Scene s4 = scene_from_json(Json::parse(kEx4));
  CHECK(s4.points[0].chart.chart_vars() == std::vector<std::string>{"x", "y3"});
}

TEST_CASE("errors name the offending field") {
  CHECK(mentions(error_of(R"({"n":1,"c":2,"points":[]})"), "m"));
  CHECK(mentions(error_of(R"({"n":1,"c":2,"m":2,"points":[{"x_vars":["x"],"graph_fns":["x^6","x^3+z"]}]})"),
                 "points[0].graph_fns[1]"));
  CHECK(mentions(error_of(R"({"n":1,"c":2,"m":2,"points":[{"x_vars":["x"],"graph_fns":["x^6+1","x^3"]}]})"),
                 "points[0]"));
  CHECK(mentions(error_of(R"({"n":1,"c":2,"m":2,"points":[{"graph_fns":["x"]}]})"),
                 "points[0].x_vars"));
  CHECK(mentions(error_of(R"({"n":1,"c":2,"m":2,"points":[{"x_vars":["x"],"graph_fns":["x"]}]})"),
                 "graph_fns"));
  CHECK(mentions(error_of(R"({"n":-1,"c":2,"m":2,"points":[]})"), "n"));
  CHECK(mentions(error_of(R"([1,2])"), "document"));
}

TEST_CASE("scene round trip") {
  for (const char* text : {kEx3, kEx4}) {
    const Scene s = scene_from_json(Json::parse(text));
    const Json j = scene_to_json(s);
    const Scene back = scene_from_json(j);
    CHECK(scene_to_json(back) == j);
    CHECK(back.points[0].chart.graph_fns == s.points[0].chart.graph_fns);
  }
}

TEST_CASE("report round trip") {
  for (const char* text : {kEx3, kEx4}) {
    const ContactReport rep = build_report(scene_from_json(Json::parse(text)));
    const Json j = report_to_json(rep);
    const ContactReport back = report_from_json(Json::parse(j.dump()));
    CHECK(report_to_json(back) == j);
    CHECK(back.a_value == rep.a_value);
    CHECK(back.points[0].order == rep.points[0].order);
    CHECK(back.points[0].local_length == rep.points[0].local_length);
  }
  const Json j = report_to_json(build_report(scene_from_json(Json::parse(kEx3))));
  CHECK(j["a_value"] == 7);
  CHECK(j["inequality_holds"] == false);
  CHECK(j["points"][0]["order_sequence"] == Json::array({6, 3}));
  CHECK(j["points"][0]["local_length"] == 3);
}

TEST_CASE("order data with fractional transforms round trips") {
  OrderData od;
  od.d = {6, 3};
  od.corank = 2;
  od.filtration_jumps = {{6, 1}, {3, 2}};
  od.adapted_transform = RationalMatrix(2, 2);
  od.adapted_transform(0, 0) = Rational(-1, 3);
  od.adapted_transform(0, 1) = 1;
  od.adapted_transform(1, 0) = 1;
  CHECK(order_data_from_json(order_data_to_json(od)) == od);
}

TEST_CASE("deformation files") {
  const Scene s = scene_from_json(Json::parse(kEx3));
  const GraphChart& ch = s.points[0].chart;
  const Deformation d = deformation_from_json(Json::parse(R"({"g":["6*x^5","3*x^2"]})"), ch);
  CHECK(d.g.size() == 2);
  CHECK_THROWS_AS(deformation_from_json(Json::parse(R"({"g":["x"]})"), ch), ContactError);
  CHECK_THROWS_AS(deformation_from_json(Json::parse(R"({"g":["y","x"]})"), ch), ContactError);
  CHECK(deformation_point(Json::parse(R"({"point":"origin","g":[]})")) == "origin");
}
