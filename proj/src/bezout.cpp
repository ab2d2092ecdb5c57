#include "latpoly/bezout.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "latpoly/error.hpp"

namespace latpoly {

namespace {

BezoutTriple euclid(Coord a, Coord b) {
    if (b == 0) return {a, 1, 0};
    const auto r = euclid(b, a % b);
    return {r.g, r.y, r.x - (a / b) * r.y};
}

void check_edge_index(const ConvexLatticePolygon& polygon, std::size_t i) {
    if (i >= polygon.size()) {
        std::ostringstream out;
        out << "edge index " << i << " out of range for a " << polygon.size() << "-gon";
        throw Error(ErrorKind::Index, out.str());
    }
}

}  // namespace

BezoutTriple extended_gcd(Coord a, Coord b) {
    if (a == 0 && b == 0) throw Error(ErrorKind::UndefinedGcd, "gcd(0, 0) is undefined");
    auto r = euclid(a < 0 ? -a : a, b < 0 ? -b : b);
    if (a < 0) r.x = -r.x;
    if (b < 0) r.y = -r.y;
    return r;
}

LatticePoint canonical_apex(LatticePoint u, LatticePoint v) {
    const LatticeVector d = v - u;
    if (!is_primitive(d)) {
        std::ostringstream out;
        out << "edge (" << u.x << ',' << u.y << ")-(" << v.x << ',' << v.y << ") is not primitive";
        throw Error(ErrorKind::Visibility, out.str());
    }
    // cross(d, r) = -1  <=>  q x - p y = 1.
    const auto bz = extended_gcd(d.dy, -d.dx);
    LatticeVector r{bz.x, bz.y};
    const Coord shift = -floor_div(dot(d, r), norm2(d));
    r = r + shift * d;
    return u + r;
}

OffsetInterval feasible_offsets(const ConvexLatticePolygon& polygon, std::size_t i) {
    check_edge_index(polygon, i);
    const std::size_t n = polygon.size();
    const LatticePoint prev = polygon.vertex(i + n - 1);
    const LatticePoint u = polygon.vertex(i);
    const LatticePoint v = polygon.vertex(i + 1);
    const LatticePoint next = polygon.vertex(i + 2);

    const LatticeVector d = v - u;
    const LatticeVector r0 = canonical_apex(u, v) - u;

    // Left turn at u: cross(e, r0 + t d) > 0 with cross(e, d) > 0.
    const LatticeVector e = u - prev;
    const Coord lo = floor_div(-cross(e, r0), cross(e, d)) + 1;
    // Left turn at v: cross((1 - t) d - r0, f) > 0 with cross(d, f) > 0.
    const LatticeVector f = next - v;
    const Coord hi = -floor_div(cross(r0, f), cross(d, f));
    return {lo, hi};
}

std::vector<ApexCandidate> apex_candidates(const ConvexLatticePolygon& polygon, std::size_t i) {
    const auto range = feasible_offsets(polygon, i);
    std::vector<ApexCandidate> out;
    if (range.empty()) return out;
    const LatticePoint u = polygon.vertex(i);
    const LatticeVector d = polygon.vertex(i + 1) - u;
    const LatticePoint w0 = canonical_apex(u, polygon.vertex(i + 1));
    for (Coord t = range.lo; t <= range.hi; ++t) {
        out.push_back({w0 + t * d, i, t, t == 0, true});
    }
    return out;
}

ApexCandidate canonical_candidate(const ConvexLatticePolygon& polygon, std::size_t i) {
    const auto range = feasible_offsets(polygon, i);
    return {canonical_apex(polygon.vertex(i), polygon.vertex(i + 1)), i, 0, true, range.contains(0)};
}

LatticePoint standard_frame_apex(Coord p, Coord q) {
    if (!(p > q && q > 1) || gcd(p, q) != 1) {
        throw Error(ErrorKind::Parameter, "standard frame needs p > q > 1 with gcd(p, q) = 1");
    }
    // q^{-1} mod p gives a' q = +1 (mod p); p - q^{-1} gives -1.
    Coord inv = extended_gcd(q, p).x % p;
    if (inv < 0) inv += p;
    const Coord a1 = std::min(inv, p - inv);
    const Coord sign = (a1 == inv) ? 1 : -1;
    const Coord b1 = (sign - a1 * q) / p;
    // -b'/a' < q/p  <=>  -b' p < q a'  (a', p > 0)
    if (-b1 * p < q * a1) return {a1, -b1};
    return {p - a1, q + b1};
}

}  // namespace latpoly
