#include "latpoly/constructions.hpp"

#include <string>

#include "latpoly/append.hpp"
#include "latpoly/error.hpp"

namespace latpoly {

namespace {

void require_k(Coord k) {
    if (k < 3) throw Error(ErrorKind::Parameter, "k must be at least 3, got " + std::to_string(k));
}

ConvexLatticePolygon append_on(const ConvexLatticePolygon& p, LatticePoint u, LatticePoint v) {
    return append(p, p.find_edge(u, v)).after;
}

}  // namespace

ConvexLatticePolygon base_collinear_triangle(Coord k) {
    require_k(k);
    return make_polygon({{0, 0}, {k + 1, -1}, {k, 1}});
}

ConvexLatticePolygon collinear_ngon(Coord k, int n) {
    if (n < 3 || n > 6) {
        throw Error(ErrorKind::Parameter,
                    "collinear interior points allow only n in {3,4,5,6}, got " + std::to_string(n));
    }
    auto p = base_collinear_triangle(k);
    const LatticePoint origin{0, 0}, right{k + 1, -1}, top{k, 1};
    if (n >= 4) p = append_on(p, origin, right);
    if (n >= 5) p = append_on(p, right, top);
    if (n >= 6) p = append_on(p, top, origin);
    return p;
}

ConvexLatticePolygon pk(Coord k) {
    require_k(k);
    if (k % 2 == 0) return make_polygon({{0, 0}, {k / 2, -1}, {k / 2 + 1, 1}, {1, 2}});
    return make_polygon({{0, 0}, {(k + 1) / 2 + 1, -1}, {(k + 1) / 2, 1}, {1, 2}});
}

ConvexLatticePolygon noncollinear_ngon(Coord k, int n) {
    if (n < 4 || n > 6) {
        throw Error(ErrorKind::Parameter, "n must be in {4,5,6}, got " + std::to_string(n));
    }
    auto p = pk(k);
    const LatticePoint origin = p.vertex(0);
    const LatticePoint bottom_right = p.vertex(1);
    const LatticePoint top_right = p.vertex(2);
    const LatticePoint apex_top = p.vertex(3);
    if (n >= 5) p = append_on(p, origin, bottom_right);
    if (n >= 6) {
        // For k = 3 the canonical apex of the edge into (1,2) is reflex at the
        // top-right vertex; take the first edge that allows an append instead.
        const std::size_t preferred = p.find_edge(top_right, apex_top);
        if (can_append(p, preferred)) return append(p, preferred).after;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (can_append(p, i)) return append(p, i).after;
        }
        throw Error(ErrorKind::Parameter, "no edge of the pentagon allows a primitive append");
    }
    return p;
}

}  // namespace latpoly
