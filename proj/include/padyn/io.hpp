#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "padyn/dimension.hpp"
#include "padyn/dynamics.hpp"
#include "padyn/measure.hpp"
#include "padyn/symbolic.hpp"

namespace padyn {

// Digit-string serialization: base-p little-endian digit list plus valuation
// and absolute precision; round-trips through scalar_from_json.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(unsigned p, const nlohmann::json& j);

nlohmann::json point_to_json(const Point& pt);

// One JSON record per time index: {"k", "x", "y", "prec"}.
std::string orbit_to_json_lines(const OrbitSegment& seg);

std::string equidist_to_csv(const EquidistReport& rep);
nlohmann::json equidist_to_json(const EquidistReport& rep);

// radius, count, paper_upper_bound, mass_lower_bound
std::string count_series_to_csv(const CountSeries& series);
nlohmann::json count_series_to_json(const CountSeries& series);

// Real embedding of the first d digits of each coordinate:
// u = sum_i digit_i(x) p^-(i+1), and likewise v; injective on distinct
// depth-d balls.  Needs pt in R^2 at absolute precision >= d.
std::pair<double, double> embed_real(const Point& pt, long d);

// Minimal static scatter plot of [0,1)^2 points.
std::string scatter_svg(const std::vector<std::pair<double, double>>& pts, int size_px = 720);

std::string scatter_csv(const std::vector<std::pair<double, double>>& pts);

// Fixed-format double printing so identical runs emit identical bytes.
std::string fmt_double(double v);

}  // namespace padyn
