#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "latpoly/affine.hpp"
#include "latpoly/append.hpp"
#include "latpoly/bezout.hpp"
#include "latpoly/enumeration.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly::io {

using nlohmann::json;

/// Either {"vertices": [[x,y], ...]} (or "points") or plain text with one
/// "x y" pair per line; blank lines and lines starting with '#' are skipped.
std::vector<LatticePoint> parse_points(std::string_view text);

ConvexLatticePolygon parse_polygon(std::string_view text);

/// Whole file, or standard input for "-".
std::string read_text(const std::string& path);

json to_json(LatticePoint p);
json to_json(std::span<const LatticePoint> points);
json to_json(const ConvexLatticePolygon& polygon);
json to_json(const AnalysisReport& report);
json to_json(const AffineMap& map);
json to_json(const ApexCandidate& candidate);
json to_json(const AppendReport& report);
json to_json(const SaturationResult& result);
json to_json(const AppendOnceReport& report);
json to_json(const ClassificationReport& report);

AffineMap affine_from_json(const json& j);

/// One "x y" line per vertex.
std::string to_text(const ConvexLatticePolygon& polygon);

}  // namespace latpoly::io
