#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

/// v -> A v + t with integer A and t.
struct AffineMap {
    Coord m11 = 1, m12 = 0;
    Coord m21 = 0, m22 = 1;
    Coord tx = 0, ty = 0;

    static constexpr AffineMap identity() { return {}; }

    constexpr Coord det() const { return m11 * m22 - m12 * m21; }
    constexpr bool is_unimodular() const { return det() == 1 || det() == -1; }

    constexpr LatticePoint operator()(LatticePoint p) const {
        return {m11 * p.x + m12 * p.y + tx, m21 * p.x + m22 * p.y + ty};
    }

    friend constexpr bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (f ∘ g)(p) = f(g(p)).
AffineMap compose(const AffineMap& f, const AffineMap& g);

/// Image polygon, re-canonicalized; orientation is restored when det = -1.
ConvexLatticePolygon apply_map(const AffineMap& f, const ConvexLatticePolygon& polygon);

AffineMap invert_map(const AffineMap& f);

/// Unimodular map sending points[i] to (i + 1, 0). The points must be
/// consecutive lattice points of one line, listed in order.
AffineMap normalize_collinear(std::span<const LatticePoint> points);

/// Seeded random unimodular map: a word of at most 8 generators (elementary
/// shears, axis swap, axis negations) followed by a translation in [-10, 10]^2.
AffineMap random_unimodular_map(std::mt19937_64& rng);

}  // namespace latpoly
