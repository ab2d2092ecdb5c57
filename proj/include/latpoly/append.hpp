#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

enum class AppendBlock {
    CollinearAtPreceding,
    ReflexAtPreceding,
    CollinearAtFollowing,
    ReflexAtFollowing,
};

std::string_view to_string(AppendBlock block) noexcept;

struct AppendDecision {
    LatticePoint apex;                  // canonical apex of the edge, set either way
    std::optional<AppendBlock> reason;  // empty when the append is allowed

    explicit operator bool() const noexcept { return !reason; }
};

/// Whether the canonical primitive triangle on edge i can be glued on
/// without losing strict convexity at either endpoint.
AppendDecision can_append(const ConvexLatticePolygon& polygon, std::size_t i);

struct AppendReport {
    ConvexLatticePolygon before;
    ConvexLatticePolygon after;
    std::size_t edge_index = 0;  // index in `before`
    LatticePoint apex;
    bool canonical_used = true;
};

/// Inserts an apex between the endpoints of edge i. Without an explicit apex
/// the canonical one is used and must be appendable.
AppendReport append(const ConvexLatticePolygon& polygon, std::size_t i,
                    std::optional<LatticePoint> apex = std::nullopt);

struct SaturationResult {
    ConvexLatticePolygon final_polygon;
    std::vector<AppendReport> steps;
    std::size_t sweeps = 0;
    // Appends that fired on an edge the input polygon did not have.
    std::size_t derived_edge_appends = 0;
};

/// Sweeps edges in ascending order, appending canonically wherever allowed,
/// until a sweep changes nothing. Edges created during a sweep are visited
/// from the next sweep on.
SaturationResult saturate(const ConvexLatticePolygon& polygon);

struct AppendOnceViolation {
    ConvexLatticePolygon polygon;  // before the append
    std::size_t edge_index = 0;
    LatticePoint apex;
    LatticePoint new_edge_from;
    LatticePoint new_edge_to;
    bool canonical_allowed = false;     // can_append said yes on the new edge
    std::size_t feasible_candidates = 0;
};

struct AppendOnceReport {
    std::size_t appends_checked = 0;
    std::size_t derived_edge_appends = 0;  // from a full saturation run
    std::vector<AppendOnceViolation> counterexamples;
};

/// Performs every allowed canonical append separately and checks that neither
/// of the two new edges admits another primitive triangle, canonical or not.
AppendOnceReport verify_append_once(const ConvexLatticePolygon& polygon);

struct OrderRange {
    std::size_t min_appends = 0;
    std::size_t max_appends = 0;
    std::size_t states = 0;
};

/// Fewest and most canonical appends over every append order that runs to a
/// fixpoint. Exhaustive, so limited to polygons with at most 8 vertices.
OrderRange saturation_order_range(const ConvexLatticePolygon& polygon);

}  // namespace latpoly
