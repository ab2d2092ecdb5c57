#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

/// True when the interior lattice points of `polygon` are exactly (1,0)..(k,0).
bool has_axis_interior(const ConvexLatticePolygon& polygon, Coord k);

/// Every convex lattice polygon (primitive edges) whose interior lattice set is
/// exactly (1,0)..(k,0), with vertices restricted to y in {-1,0,1},
/// x in [1 - k*m, k + k*m] on y = ±1, and only (0,0), (k+1,0) on y = 0.
/// Canonical, deduplicated, sorted.
std::vector<ConvexLatticePolygon> enumerate_collinear(Coord k, Coord x_margin = 2);

struct ClassificationReport {
    Coord k = 0;
    Coord x_margin = 0;
    Coord x_min = 0;  // x-range searched on the lines y = ±1
    Coord x_max = 0;
    std::set<int> achievable_n;
    std::map<int, std::size_t> count_per_n;
    std::map<int, ConvexLatticePolygon> witnesses;  // smallest canonical polygon per n
};

/// Enumerates at x_margin and x_margin + 1 and throws ErrorKind::Instability
/// if the achievable vertex counts differ.
ClassificationReport classify(Coord k, Coord x_margin = 2);

/// Seeded sampler of distinct valid polygons: hulls of random point sets in
/// [0, box_size]^2 with all edges primitive. Output order is generation order.
std::vector<ConvexLatticePolygon> corpus(std::uint64_t seed, Coord box_size, std::size_t count);

struct StripRegion {
    Coord x_min = 0;
    Coord x_max = 0;
    Coord y_min = 0;
    Coord y_max = 0;
};

/// All polygons with vertices in `region` whose interior lattice set is exactly
/// (1,0)..(k,0), found by a pruned subset search over admissible vertices.
/// No assumption on the vertex rows.
std::vector<ConvexLatticePolygon> enumerate_in_region(Coord k, const StripRegion& region);

/// First polygon with a vertex at |y| >= 2 inside `region` whose interior set
/// is exactly (1,0)..(k,0), or nothing. The region must reach past both ends
/// of the interior points and cover the rows y = ±2.
std::optional<ConvexLatticePolygon> strip_violation_search(Coord k, const StripRegion& region);

}  // namespace latpoly
