#include "latpoly/enumeration.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "latpoly/error.hpp"

namespace latpoly {

namespace {

void require_k(Coord k) {
    if (k < 3) throw Error(ErrorKind::Parameter, "k must be at least 3, got " + std::to_string(k));
}

bool edges_primitive(std::span<const LatticePoint> hull) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (!is_primitive(hull[(i + 1) % hull.size()] - hull[i])) return false;
    }
    return true;
}

bool on_axis_segment(LatticePoint p, Coord k) { return p.y == 0 && p.x >= 1 && p.x <= k; }

// Closed containment in a counter-clockwise strict hull with at least 3 vertices.
bool closed_contains(std::span<const LatticePoint> hull, LatticePoint q) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        if (cross(b - a, q - a) < 0) return false;
    }
    return true;
}

// Lattice points of conv(points), which must span a 2-dimensional hull.
template <typename Visit>
bool all_hull_points(std::span<const LatticePoint> hull, Visit&& ok) {
    Coord x0 = hull[0].x, x1 = hull[0].x, y0 = hull[0].y, y1 = hull[0].y;
    for (const auto& p : hull) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    for (Coord y = y0; y <= y1; ++y) {
        for (Coord x = x0; x <= x1; ++x) {
            if (closed_contains(hull, {x, y}) && !ok(LatticePoint{x, y})) return false;
        }
    }
    return true;
}

std::optional<ConvexLatticePolygon> polygon_if_axis_interior(const std::vector<LatticePoint>& chosen,
                                                             Coord k) {
    auto hull = convex_hull(chosen);
    if (hull.size() < 3 || hull.size() != chosen.size() || !edges_primitive(hull)) return std::nullopt;
    auto polygon = make_polygon(hull);
    if (!has_axis_interior(polygon, k)) return std::nullopt;
    return polygon;
}

// Vertex options on one of the lines y = ±1. That line supports the polygon,
// so two chosen points there span an edge, which is primitive only when they
// are adjacent; the empty choice leaves no point of the polygon above (below)
// the axis and hence no interior at all. Both are discarded up front.
std::vector<std::vector<LatticePoint>> row_options(Coord y, Coord x_lo, Coord x_hi) {
    std::vector<std::vector<LatticePoint>> out;
    for (Coord x = x_lo; x <= x_hi; ++x) {
        out.push_back({{x, y}});
        if (x + 1 <= x_hi) out.push_back({{x, y}, {x + 1, y}});
    }
    return out;
}

class RegionSearch {
public:
    RegionSearch(Coord k, const StripRegion& region, bool far_only)
        : k_(k), far_only_(far_only) {
        for (Coord y = region.y_min; y <= region.y_max; ++y) {
            for (Coord x = region.x_min; x <= region.x_max; ++x) {
                if (admissible({x, y})) candidates_.push_back({x, y});
            }
        }
    }

    bool has_far_candidate() const {
        return std::any_of(candidates_.begin(), candidates_.end(),
                           [](const LatticePoint& p) { return p.y >= 2 || p.y <= -2; });
    }

    std::vector<ConvexLatticePolygon> run(bool first_only) {
        first_only_ = first_only;
        found_.clear();
        if (far_only_ && !has_far_candidate()) return {};
        std::vector<LatticePoint> chosen;
        dfs(0, chosen);
        std::sort(found_.begin(), found_.end());
        found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
        return found_;
    }

private:
    // A vertex p forces conv(S ∪ {p}) into the polygon; every lattice point of
    // that set other than p is interior and so must belong to S.
    bool admissible(LatticePoint p) const {
        if (on_axis_segment(p, k_)) return false;
        if (p.y == 0) return p.x == 0 || p.x == k_ + 1;
        const std::vector<LatticePoint> hull = convex_hull({{1, 0}, {k_, 0}, p});
        return all_hull_points(hull, [&](LatticePoint q) { return q == p || on_axis_segment(q, k_); });
    }

    // Growing the vertex set only grows the hull, so a chosen point that is not
    // a hull vertex, or a stray lattice point in the hull, is never repaired.
    bool viable(const std::vector<LatticePoint>& chosen) const {
        std::vector<LatticePoint> pts = chosen;
        for (Coord x = 1; x <= k_; ++x) pts.push_back({x, 0});
        const auto hull = convex_hull(pts);
        for (const auto& v : chosen) {
            if (std::find(hull.begin(), hull.end(), v) == hull.end()) return false;
        }
        return all_hull_points(hull, [&](LatticePoint q) {
            return on_axis_segment(q, k_) || std::find(chosen.begin(), chosen.end(), q) != chosen.end();
        });
    }

    void dfs(std::size_t from, std::vector<LatticePoint>& chosen) {
        for (std::size_t j = from; j < candidates_.size(); ++j) {
            if (first_only_ && !found_.empty()) return;
            chosen.push_back(candidates_[j]);
            if (viable(chosen)) {
                const bool far = std::any_of(chosen.begin(), chosen.end(),
                                             [](const LatticePoint& p) { return p.y >= 2 || p.y <= -2; });
                if (!far_only_ || far) {
                    if (auto polygon = polygon_if_axis_interior(chosen, k_)) found_.push_back(*polygon);
                }
                dfs(j + 1, chosen);
            }
            chosen.pop_back();
        }
    }

    Coord k_;
    bool far_only_;
    bool first_only_ = false;
    std::vector<LatticePoint> candidates_;
    std::vector<ConvexLatticePolygon> found_;
};

}  // namespace

bool has_axis_interior(const ConvexLatticePolygon& polygon, Coord k) {
    // B = n for these polygons, so Pick pins the count before the scan.
    const Coord twice_interior = area2(polygon) - static_cast<Coord>(polygon.size()) + 2;
    if (twice_interior != 2 * k) return false;
    const auto pts = interior_points(polygon);
    if (static_cast<Coord>(pts.size()) != k) return false;
    return std::all_of(pts.begin(), pts.end(), [&](const LatticePoint& p) { return on_axis_segment(p, k); });
}

std::vector<ConvexLatticePolygon> enumerate_collinear(Coord k, Coord x_margin) {
    require_k(k);
    if (x_margin < 1) throw Error(ErrorKind::Parameter, "x_margin must be at least 1");
    const Coord x_lo = 1 - k * x_margin;
    const Coord x_hi = k + k * x_margin;
    if (x_lo < -kCoordLimit || x_hi > kCoordLimit) throw Error(ErrorKind::Parameter, "search window too large");

    const auto tops = row_options(1, x_lo, x_hi);
    const auto bottoms = row_options(-1, x_lo, x_hi);
    const LatticePoint left{0, 0}, right{k + 1, 0};

    std::vector<ConvexLatticePolygon> out;
    std::vector<LatticePoint> chosen;
    for (const auto& top : tops) {
        for (const auto& bottom : bottoms) {
            for (int axis_mask = 0; axis_mask < 4; ++axis_mask) {
                chosen.assign(top.begin(), top.end());
                chosen.insert(chosen.end(), bottom.begin(), bottom.end());
                if (axis_mask & 1) chosen.push_back(left);
                if (axis_mask & 2) chosen.push_back(right);
                if (auto polygon = polygon_if_axis_interior(chosen, k)) out.push_back(std::move(*polygon));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ClassificationReport classify(Coord k, Coord x_margin) {
    const auto polygons = enumerate_collinear(k, x_margin);
    const auto wider = enumerate_collinear(k, x_margin + 1);

    ClassificationReport report;
    report.k = k;
    report.x_margin = x_margin;
    report.x_min = 1 - k * x_margin;
    report.x_max = k + k * x_margin;
    for (const auto& p : polygons) {
        const int n = static_cast<int>(p.size());
        report.achievable_n.insert(n);
        ++report.count_per_n[n];
        report.witnesses.try_emplace(n, p);  // input is sorted, first is smallest
    }
    std::set<int> wider_n;
    for (const auto& p : wider) wider_n.insert(static_cast<int>(p.size()));
    if (wider_n != report.achievable_n) {
        throw Error(ErrorKind::Instability,
                    "achievable vertex counts change between x_margin " + std::to_string(x_margin) +
                        " and " + std::to_string(x_margin + 1) + "; widen the margin");
    }
    return report;
}

std::vector<ConvexLatticePolygon> corpus(std::uint64_t seed, Coord box_size, std::size_t count) {
    if (box_size < 1 || box_size > 64) throw Error(ErrorKind::Parameter, "box_size must be in [1, 64]");
    if (count < 1 || count > 100000) throw Error(ErrorKind::Parameter, "count must be in [1, 100000]");

    // Raw engine output only: std::mt19937_64 is fully specified, the standard
    // distributions are not.
    std::mt19937_64 rng(seed);
    const auto side = static_cast<std::uint64_t>(box_size) + 1;
    std::set<ConvexLatticePolygon> seen;
    std::vector<ConvexLatticePolygon> out;
    const std::size_t max_draws = 1000 * count + 100000;
    std::vector<LatticePoint> pts;
    for (std::size_t draw = 0; out.size() < count; ++draw) {
        if (draw == max_draws) {
            throw Error(ErrorKind::Parameter, "box too small to produce " + std::to_string(count) +
                                                  " distinct polygons");
        }
        const std::size_t m = 3 + rng() % 6;
        pts.clear();
        for (std::size_t i = 0; i < m; ++i) {
            const auto x = static_cast<Coord>(rng() % side);
            const auto y = static_cast<Coord>(rng() % side);
            pts.push_back({x, y});
        }
        const auto hull = convex_hull(pts);
        if (hull.size() < 3 || !edges_primitive(hull)) continue;
        auto polygon = make_polygon(hull);
        if (seen.insert(polygon).second) out.push_back(std::move(polygon));
    }
    return out;
}

std::vector<ConvexLatticePolygon> enumerate_in_region(Coord k, const StripRegion& region) {
    require_k(k);
    if (region.x_min > region.x_max || region.y_min > region.y_max) {
        throw Error(ErrorKind::Parameter, "empty search region");
    }
    return RegionSearch(k, region, false).run(false);
}

std::optional<ConvexLatticePolygon> strip_violation_search(Coord k, const StripRegion& region) {
    require_k(k);
    if (!(region.x_min < 1 && region.x_max > k && region.y_min <= -2 && region.y_max >= 2)) {
        throw Error(ErrorKind::Parameter,
                    "region must satisfy x_min < 1, x_max > k, y_min <= -2 and y_max >= 2");
    }
    auto found = RegionSearch(k, region, true).run(true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

}  // namespace latpoly
