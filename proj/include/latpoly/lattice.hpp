#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace latpoly {

using Coord = std::int64_t;

/// Largest accepted |x| or |y| for polygon vertices. At this bound every cross
/// product and shoelace sum stays well inside signed 64-bit.
inline constexpr Coord kCoordLimit = Coord{1} << 20;

struct LatticeVector {
    Coord dx = 0;
    Coord dy = 0;

    friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

struct LatticePoint {
    Coord x = 0;
    Coord y = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr LatticeVector operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
constexpr LatticePoint operator+(LatticePoint p, LatticeVector v) { return {p.x + v.dx, p.y + v.dy}; }
constexpr LatticePoint operator-(LatticePoint p, LatticeVector v) { return {p.x - v.dx, p.y - v.dy}; }
constexpr LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.dx + b.dx, a.dy + b.dy}; }
constexpr LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.dx - b.dx, a.dy - b.dy}; }
constexpr LatticeVector operator*(Coord k, LatticeVector v) { return {k * v.dx, k * v.dy}; }

constexpr Coord cross(LatticeVector a, LatticeVector b) { return a.dx * b.dy - a.dy * b.dx; }
constexpr Coord dot(LatticeVector a, LatticeVector b) { return a.dx * b.dx + a.dy * b.dy; }
constexpr Coord norm2(LatticeVector v) { return dot(v, v); }

/// gcd(|a|, |b|); gcd(0, 0) = 0.
Coord gcd(Coord a, Coord b) noexcept;

/// Floor division for b > 0.
constexpr Coord floor_div(Coord a, Coord b) {
    Coord q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// gcd(|dx|, |dy|) == 1.
bool is_primitive(LatticeVector v) noexcept;

/// Throws ErrorKind::Range if either coordinate exceeds kCoordLimit.
void check_range(LatticePoint p);

/// Sign of (b - a) x (c - b): +1 strict left turn, 0 collinear, -1 strict right turn.
int orientation(LatticePoint a, LatticePoint b, LatticePoint c) noexcept;

/// Number of lattice points strictly between v and w. Zero iff v and w are visible.
Coord segment_lattice_count(LatticePoint v, LatticePoint w);

/// Strictly convex lattice polygon with primitive edges, stored counter-clockwise
/// starting at the lexicographically smallest vertex. Only make_polygon builds one.
class ConvexLatticePolygon {
public:
    std::span<const LatticePoint> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    const LatticePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    /// Index of the edge (u, v) in this polygon, or size() when absent.
    std::size_t find_edge(LatticePoint u, LatticePoint v) const noexcept;

    friend bool operator==(const ConvexLatticePolygon&, const ConvexLatticePolygon&) = default;
    friend auto operator<=>(const ConvexLatticePolygon& a, const ConvexLatticePolygon& b) {
        return a.vertices_ <=> b.vertices_;
    }

private:
    friend ConvexLatticePolygon make_polygon(std::span<const LatticePoint> points);
    explicit ConvexLatticePolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}

    std::vector<LatticePoint> vertices_;
};

/// Validates and canonicalizes. Accepts either orientation and any starting vertex.
ConvexLatticePolygon make_polygon(std::span<const LatticePoint> points);

inline ConvexLatticePolygon make_polygon(std::initializer_list<LatticePoint> points) {
    return make_polygon(std::span<const LatticePoint>(points.begin(), points.size()));
}

/// Twice the area (shoelace).
Coord area2(const ConvexLatticePolygon& polygon) noexcept;

/// Lattice points strictly inside, row by row (y ascending, then x ascending).
std::vector<LatticePoint> interior_points(const ConvexLatticePolygon& polygon);

/// True when every edge sees p on its strict left.
bool strictly_inside(const ConvexLatticePolygon& polygon, LatticePoint p) noexcept;

/// True for fewer than three points or when all points lie on one line.
bool all_collinear(std::span<const LatticePoint> points) noexcept;

struct AnalysisReport {
    std::size_t n = 0;
    Coord boundary = 0;
    Coord interior = 0;
    Coord area2 = 0;
    std::vector<LatticePoint> interior_pts;
    bool interior_collinear = true;
    bool pick_ok = false;
    bool coleman_ok = false;
};

AnalysisReport analyze(const ConvexLatticePolygon& polygon);

/// Strict convex hull (collinear points dropped), counter-clockwise from the
/// lexicographic minimum. Returns fewer than three points for degenerate input.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

}  // namespace latpoly
