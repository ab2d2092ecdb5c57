#include "latpoly/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "latpoly/error.hpp"

namespace latpoly {

namespace {

std::string describe(LatticePoint p) {
    std::ostringstream out;
    out << '(' << p.x << ',' << p.y << ')';
    return out.str();
}

Coord signed_area2(std::span<const LatticePoint> v) {
    Coord sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        sum += a.x * b.y - a.y * b.x;
    }
    return sum;
}

}  // namespace

Coord gcd(Coord a, Coord b) noexcept {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

bool is_primitive(LatticeVector v) noexcept { return gcd(v.dx, v.dy) == 1; }

void check_range(LatticePoint p) {
    if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit || p.y < -kCoordLimit) {
        throw Error(ErrorKind::Range, "coordinate out of range at " + describe(p));
    }
}

int orientation(LatticePoint a, LatticePoint b, LatticePoint c) noexcept {
    const Coord z = cross(b - a, c - b);
    return (z > 0) - (z < 0);
}

Coord segment_lattice_count(LatticePoint v, LatticePoint w) {
    if (v == w) {
        throw Error(ErrorKind::Degenerate, "segment endpoints coincide at " + describe(v));
    }
    return gcd(w.x - v.x, w.y - v.y) - 1;
}

std::size_t ConvexLatticePolygon::find_edge(LatticePoint u, LatticePoint v) const noexcept {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices_[i] == u && vertices_[(i + 1) % n] == v) return i;
    }
    return n;
}

ConvexLatticePolygon make_polygon(std::span<const LatticePoint> points) {
    if (points.size() < 3) {
        throw Error(ErrorKind::Convexity, "a polygon needs at least 3 vertices");
    }
    for (const auto& p : points) check_range(p);

    std::vector<LatticePoint> v(points.begin(), points.end());
    {
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw Error(ErrorKind::Duplicate, "duplicate vertex " + describe(*dup));
        }
    }

    const Coord area = signed_area2(v);
    if (area == 0) throw Error(ErrorKind::Convexity, "vertices are collinear");
    if (area < 0) std::reverse(v.begin(), v.end());
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());

    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % n];
        const auto& c = v[(i + 2) % n];
        const int turn = orientation(a, b, c);
        if (turn == 0) throw Error(ErrorKind::Convexity, "collinear vertices at " + describe(b));
        if (turn < 0) throw Error(ErrorKind::Convexity, "reflex vertex at " + describe(b));
    }
    // All left turns still admit a star that winds twice; the fan from the
    // extreme vertex must sweep monotonically.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (cross(v[i] - v[0], v[i + 1] - v[0]) <= 0) {
            throw Error(ErrorKind::Convexity, "vertex list winds more than once");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % n];
        if (!is_primitive(b - a)) {
            throw Error(ErrorKind::Visibility,
                        "edge " + describe(a) + "-" + describe(b) + " contains lattice points");
        }
    }
    return ConvexLatticePolygon(std::move(v));
}

Coord area2(const ConvexLatticePolygon& polygon) noexcept {
    return signed_area2(polygon.vertices());
}

bool strictly_inside(const ConvexLatticePolygon& polygon, LatticePoint p) noexcept {
    const auto v = polygon.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (orientation(v[i], v[(i + 1) % v.size()], p) != 1) return false;
    }
    return true;
}

std::vector<LatticePoint> interior_points(const ConvexLatticePolygon& polygon) {
    const auto v = polygon.vertices();
    auto [xmin, xmax] = std::minmax_element(v.begin(), v.end(),
                                            [](auto& a, auto& b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(v.begin(), v.end(),
                                            [](auto& a, auto& b) { return a.y < b.y; });
    std::vector<LatticePoint> out;
    for (Coord y = ymin->y + 1; y < ymax->y; ++y) {
        for (Coord x = xmin->x + 1; x < xmax->x; ++x) {
            if (strictly_inside(polygon, {x, y})) out.push_back({x, y});
        }
    }
    return out;
}

bool all_collinear(std::span<const LatticePoint> points) noexcept {
    if (points.size() < 3) return true;
    const auto& a = points[0];
    const auto& b = points[1];
    return std::all_of(points.begin() + 2, points.end(),
                       [&](const LatticePoint& c) { return cross(b - a, c - a) == 0; });
}

AnalysisReport analyze(const ConvexLatticePolygon& polygon) {
    AnalysisReport r;
    const auto v = polygon.vertices();
    r.n = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        r.boundary += gcd(v[(i + 1) % v.size()].x - v[i].x, v[(i + 1) % v.size()].y - v[i].y);
    }
    r.area2 = area2(polygon);
    r.interior_pts = interior_points(polygon);
    r.interior = static_cast<Coord>(r.interior_pts.size());
    r.interior_collinear = all_collinear(r.interior_pts);
    r.pick_ok = r.area2 == r.boundary + 2 * r.interior - 2;
    r.coleman_ok = r.boundary <= 2 * r.interior - static_cast<Coord>(r.n) + 10;
    return r;
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;

    std::vector<LatticePoint> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = points[i];
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace latpoly
