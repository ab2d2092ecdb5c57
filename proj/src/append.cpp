#include "latpoly/append.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "latpoly/bezout.hpp"
#include "latpoly/error.hpp"

namespace latpoly {

namespace {

using Edge = std::pair<LatticePoint, LatticePoint>;

std::vector<Edge> edges_of(const ConvexLatticePolygon& polygon) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        out.emplace_back(polygon.vertex(i), polygon.vertex(i + 1));
    }
    return out;
}

ConvexLatticePolygon insert_after(const ConvexLatticePolygon& polygon, std::size_t i,
                                  LatticePoint apex) {
    std::vector<LatticePoint> v(polygon.vertices().begin(), polygon.vertices().end());
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, apex);
    return make_polygon(v);
}

std::string describe(LatticePoint p) {
    std::ostringstream out;
    out << '(' << p.x << ',' << p.y << ')';
    return out.str();
}

}  // namespace

std::string_view to_string(AppendBlock block) noexcept {
    switch (block) {
        case AppendBlock::CollinearAtPreceding: return "collinear at preceding vertex";
        case AppendBlock::ReflexAtPreceding: return "reflex at preceding vertex";
        case AppendBlock::CollinearAtFollowing: return "collinear at following vertex";
        case AppendBlock::ReflexAtFollowing: return "reflex at following vertex";
    }
    return "unknown";
}

AppendDecision can_append(const ConvexLatticePolygon& polygon, std::size_t i) {
    if (i >= polygon.size()) throw Error(ErrorKind::Index, "edge index out of range");
    const std::size_t n = polygon.size();
    const LatticePoint prev = polygon.vertex(i + n - 1);
    const LatticePoint u = polygon.vertex(i);
    const LatticePoint v = polygon.vertex(i + 1);
    const LatticePoint next = polygon.vertex(i + 2);

    AppendDecision d{canonical_apex(u, v), std::nullopt};
    if (int turn = orientation(prev, u, d.apex); turn != 1) {
        d.reason = turn == 0 ? AppendBlock::CollinearAtPreceding : AppendBlock::ReflexAtPreceding;
    } else if (turn = orientation(d.apex, v, next); turn != 1) {
        d.reason = turn == 0 ? AppendBlock::CollinearAtFollowing : AppendBlock::ReflexAtFollowing;
    }
    return d;
}

AppendReport append(const ConvexLatticePolygon& polygon, std::size_t i,
                    std::optional<LatticePoint> apex) {
    const auto decision = can_append(polygon, i);
    if (!apex) {
        if (!decision) {
            throw Error(ErrorKind::Convexity,
                        "canonical apex " + describe(decision.apex) + " is blocked: " +
                            std::string(to_string(*decision.reason)));
        }
        return {polygon, insert_after(polygon, i, decision.apex), i, decision.apex, true};
    }

    const LatticePoint u = polygon.vertex(i);
    const LatticePoint v = polygon.vertex(i + 1);
    if (cross(v - u, *apex - u) != -1) {
        throw Error(ErrorKind::NotPrimitive,
                    describe(*apex) + " is not on the nearest exterior lattice line of the edge");
    }
    if (orientation(polygon.vertex(i + polygon.size() - 1), u, *apex) != 1 ||
        orientation(*apex, v, polygon.vertex(i + 2)) != 1) {
        throw Error(ErrorKind::Convexity, "inserting " + describe(*apex) + " breaks convexity");
    }
    return {polygon, insert_after(polygon, i, *apex), i, *apex, *apex == decision.apex};
}

SaturationResult saturate(const ConvexLatticePolygon& polygon) {
    const auto original = edges_of(polygon);
    SaturationResult result{polygon, {}, 0, 0};
    bool changed = true;
    while (changed) {
        changed = false;
        ++result.sweeps;
        for (const auto& [u, v] : edges_of(result.final_polygon)) {
            const std::size_t i = result.final_polygon.find_edge(u, v);
            if (!can_append(result.final_polygon, i)) continue;
            auto report = append(result.final_polygon, i);
            if (std::find(original.begin(), original.end(), Edge{u, v}) == original.end()) {
                ++result.derived_edge_appends;
            }
            result.final_polygon = report.after;
            result.steps.push_back(std::move(report));
            changed = true;
        }
    }
    return result;
}

AppendOnceReport verify_append_once(const ConvexLatticePolygon& polygon) {
    AppendOnceReport report;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        if (!can_append(polygon, i)) continue;
        const auto step = append(polygon, i);
        ++report.appends_checked;
        const LatticePoint u = polygon.vertex(i);
        const LatticePoint v = polygon.vertex(i + 1);
        for (const auto& [from, to] : {Edge{u, step.apex}, Edge{step.apex, v}}) {
            const std::size_t j = step.after.find_edge(from, to);
            const bool canonical_ok = static_cast<bool>(can_append(step.after, j));
            const auto candidates = apex_candidates(step.after, j);
            if (canonical_ok || !candidates.empty()) {
                report.counterexamples.push_back(
                    {polygon, i, step.apex, from, to, canonical_ok, candidates.size()});
            }
        }
    }
    report.derived_edge_appends = saturate(polygon).derived_edge_appends;
    return report;
}

OrderRange saturation_order_range(const ConvexLatticePolygon& polygon) {
    if (polygon.size() > 8) {
        throw Error(ErrorKind::Parameter, "order search is limited to polygons with at most 8 vertices");
    }
    std::map<ConvexLatticePolygon, std::pair<std::size_t, std::size_t>> memo;
    auto search = [&](auto&& self, const ConvexLatticePolygon& p) -> std::pair<std::size_t, std::size_t> {
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        std::pair<std::size_t, std::size_t> best{0, 0};
        bool any = false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!can_append(p, i)) continue;
            auto [lo, hi] = self(self, append(p, i).after);
            if (!any) {
                best = {lo + 1, hi + 1};
                any = true;
            } else {
                best.first = std::min(best.first, lo + 1);
                best.second = std::max(best.second, hi + 1);
            }
        }
        memo.emplace(p, best);
        return best;
    };
    auto [lo, hi] = search(search, polygon);
    return {lo, hi, memo.size()};
}

}  // namespace latpoly
