#include "latpoly/affine.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "latpoly/bezout.hpp"
#include "latpoly/error.hpp"

namespace latpoly {

namespace {

void require_unimodular(const AffineMap& f) {
    if (!f.is_unimodular()) {
        std::ostringstream out;
        out << "map is not unimodular (det = " << f.det() << ")";
        throw Error(ErrorKind::Unimodular, out.str());
    }
}

}  // namespace

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    AffineMap h;
    h.m11 = f.m11 * g.m11 + f.m12 * g.m21;
    h.m12 = f.m11 * g.m12 + f.m12 * g.m22;
    h.m21 = f.m21 * g.m11 + f.m22 * g.m21;
    h.m22 = f.m21 * g.m12 + f.m22 * g.m22;
    h.tx = f.m11 * g.tx + f.m12 * g.ty + f.tx;
    h.ty = f.m21 * g.tx + f.m22 * g.ty + f.ty;
    return h;
}

ConvexLatticePolygon apply_map(const AffineMap& f, const ConvexLatticePolygon& polygon) {
    require_unimodular(f);
    std::vector<LatticePoint> image;
    image.reserve(polygon.size());
    for (const auto& p : polygon.vertices()) image.push_back(f(p));
    if (f.det() < 0) std::reverse(image.begin(), image.end());
    return make_polygon(image);
}

AffineMap invert_map(const AffineMap& f) {
    require_unimodular(f);
    const Coord d = f.det();  // d == 1/d
    AffineMap g;
    g.m11 = d * f.m22;
    g.m12 = -d * f.m12;
    g.m21 = -d * f.m21;
    g.m22 = d * f.m11;
    g.tx = -(g.m11 * f.tx + g.m12 * f.ty);
    g.ty = -(g.m21 * f.tx + g.m22 * f.ty);
    return g;
}

AffineMap normalize_collinear(std::span<const LatticePoint> points) {
    if (points.size() < 2) {
        throw Error(ErrorKind::Parameter, "normalization needs at least 2 points");
    }
    const LatticeVector d = points[1] - points[0];
    if (d == LatticeVector{}) throw Error(ErrorKind::Spacing, "repeated point");
    for (std::size_t i = 2; i < points.size(); ++i) {
        if (cross(d, points[i] - points[0]) != 0) {
            throw Error(ErrorKind::Collinearity, "points are not collinear");
        }
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i] - points[i - 1] != d || !is_primitive(d)) {
            throw Error(ErrorKind::Spacing, "points are not consecutive lattice points of their line");
        }
    }

    // Rows (-b, a) and (-q, p) with a q - b p = 1 send d = (p, q) to (1, 0).
    const Coord p = d.dx;
    const Coord q = d.dy;
    const auto bz = extended_gcd(q, -p);  // q x - p y = 1
    Coord a = bz.x;
    Coord b = bz.y;
    // The family (a + k p, b + k q) all work; pick the smallest |b|, then |a|.
    auto cost = [](Coord aa, Coord bb) { return std::array{std::llabs(bb), std::llabs(aa)}; };
    Coord shift = 0;
    if (q != 0) {
        shift = -floor_div(b * (q > 0 ? 1 : -1), std::llabs(q));
    } else {
        shift = -floor_div(a * (p > 0 ? 1 : -1), std::llabs(p));
    }
    Coord best_a = a + shift * p;
    Coord best_b = b + shift * q;
    for (Coord k = shift - 2; k <= shift + 2; ++k) {
        const Coord ca = a + k * p;
        const Coord cb = b + k * q;
        if (cost(ca, cb) < cost(best_a, best_b)) {
            best_a = ca;
            best_b = cb;
        }
    }
    a = best_a;
    b = best_b;

    AffineMap f;
    f.m11 = -b;
    f.m12 = a;
    f.m21 = -q;
    f.m22 = p;
    const LatticePoint first = f(points[0]);
    f.tx = 1 - first.x;
    f.ty = -first.y;
    return f;
}

AffineMap random_unimodular_map(std::mt19937_64& rng) {
    static constexpr std::array<AffineMap, 7> kGenerators{{
        {1, 1, 0, 1, 0, 0},
        {1, -1, 0, 1, 0, 0},
        {1, 0, 1, 1, 0, 0},
        {1, 0, -1, 1, 0, 0},
        {0, 1, 1, 0, 0, 0},
        {-1, 0, 0, 1, 0, 0},
        {1, 0, 0, -1, 0, 0},
    }};
    const auto length = static_cast<int>(rng() % 9);
    AffineMap f = AffineMap::identity();
    for (int i = 0; i < length; ++i) f = compose(kGenerators[rng() % kGenerators.size()], f);
    f.tx = static_cast<Coord>(rng() % 21) - 10;
    f.ty = static_cast<Coord>(rng() % 21) - 10;
    return f;
}

}  // namespace latpoly
