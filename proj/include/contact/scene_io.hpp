#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "contact/chart_model.hpp"
#include "contact/contact_invariants.hpp"
#include "contact/deform_check.hpp"
#include "contact/fibre_bounds.hpp"
#include "contact/order_seq.hpp"

namespace contact {

using Json = nlohmann::json;

// Scene document:
//   {"n":..,"c":..,"m":..,"points":[{"label":..,"x_vars":[..],"extra_y_vars":[..],
//     "graph_fns":[poly],"base_fns":[poly]}]}
// Errors name the offending field (e.g. "points[0].graph_fns[1]: ...").
Scene scene_from_json(const Json& doc);
Json scene_to_json(const Scene& scene);
Scene load_scene(const std::filesystem::path& path);

// {"g":[poly, ...]} with an optional "point" label selecting the chart;
// polynomials use the chart variables of that point.
Deformation deformation_from_json(const Json& doc, const GraphChart& chart);
std::string deformation_point(const Json& doc);
Json load_json(const std::filesystem::path& path);

Json order_data_to_json(const OrderData& od);
OrderData order_data_from_json(const Json& j);

Json report_to_json(const ContactReport& report);
ContactReport report_from_json(const Json& j);

Json bound_row_to_json(const BoundRow& row, unsigned digits);

}  // namespace contact
