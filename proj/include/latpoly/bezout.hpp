#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

struct BezoutTriple {
    Coord g = 0;
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const BezoutTriple&, const BezoutTriple&) = default;
};

/// a x + b y = g = gcd(a, b) > 0, with the coefficients produced by the
/// classical Euclidean recursion (the minimal pair for positive inputs).
BezoutTriple extended_gcd(Coord a, Coord b);

/// The exterior lattice point nearest to the primitive edge u -> v of a
/// counter-clockwise polygon: the unique w with cross(v - u, w - u) = -1 and
/// 0 <= dot(v - u, w - u) < |v - u|^2. conv{u, w, v} is a primitive triangle.
LatticePoint canonical_apex(LatticePoint u, LatticePoint v);

/// A point on the exterior minimal-distance line of an edge, w = apex + offset * (v - u).
struct ApexCandidate {
    LatticePoint w;
    std::size_t edge_index = 0;
    Coord offset = 0;
    bool canonical = false;
    bool feasible = false;

    friend constexpr bool operator==(const ApexCandidate&, const ApexCandidate&) = default;
};

/// Inclusive offset interval of feasible apexes on edge i; empty when lo > hi.
struct OffsetInterval {
    Coord lo = 0;
    Coord hi = -1;

    constexpr bool empty() const { return lo > hi; }
    constexpr bool contains(Coord t) const { return lo <= t && t <= hi; }
};

/// Offsets t for which inserting canonical_apex + t d between the endpoints of
/// edge i keeps the polygon strictly convex.
OffsetInterval feasible_offsets(const ConvexLatticePolygon& polygon, std::size_t i);

/// All feasible apexes of edge i sorted by offset. Possibly empty.
std::vector<ApexCandidate> apex_candidates(const ConvexLatticePolygon& polygon, std::size_t i);

/// The offset-0 candidate of edge i, with its feasibility.
ApexCandidate canonical_candidate(const ConvexLatticePolygon& polygon, std::size_t i);

/// Apex from the sign-split Bézout recipe in the standard frame (edge (0,0) -> (p, q),
/// p > q > 1, gcd 1): take a' > 0 minimal with a' q + b' p = ±1, then use
/// (a', -b') or its reflection (p - a', q + b') according to -b'/a' vs q/p.
/// Kept as an independent cross-check of canonical_apex.
LatticePoint standard_frame_apex(Coord p, Coord q);

}  // namespace latpoly
