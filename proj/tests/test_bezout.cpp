#include <vector>

#include "doctest.h"
#include "latpoly/bezout.hpp"
#include "latpoly/enumeration.hpp"
#include "latpoly/error.hpp"
#include "oracles.hpp"

using namespace latpoly;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected latpoly::Error");
    return ErrorKind::Parse;
}

// Offsets t in [-r, r] for which inserting apex + t d yields a valid polygon.
std::vector<Coord> offsets_by_rebuild(const ConvexLatticePolygon& p, std::size_t i, Coord r) {
    const LatticePoint u = p.vertex(i);
    const LatticePoint v = p.vertex(i + 1);
    const LatticePoint w0 = canonical_apex(u, v);
    std::vector<Coord> out;
    for (Coord t = -r; t <= r; ++t) {
        std::vector<LatticePoint> pts(p.vertices().begin(), p.vertices().end());
        pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1, w0 + t * (v - u));
        try {
            (void)make_polygon(pts);
            out.push_back(t);
        } catch (const Error&) {
        }
    }
    return out;
}

}  // namespace

TEST_CASE("extended_gcd") {
    CHECK(extended_gcd(240, 46) == BezoutTriple{2, -9, 47});
    CHECK(extended_gcd(5, 3) == BezoutTriple{1, -1, 2});
    CHECK(extended_gcd(0, 7) == BezoutTriple{7, 0, 1});
    CHECK(extended_gcd(-4, 6).g == 2);
    CHECK(kind_of([] { extended_gcd(0, 0); }) == ErrorKind::UndefinedGcd);

    for (Coord a = -30; a <= 30; ++a) {
        for (Coord b = -30; b <= 30; ++b) {
            if (a == 0 && b == 0) continue;
            const auto t = extended_gcd(a, b);
            CHECK(t.g == gcd(a, b));
            CHECK(t.g > 0);
            CHECK(a * t.x + b * t.y == t.g);
        }
    }
}

TEST_CASE("canonical_apex examples") {
    CHECK(canonical_apex({0, 0}, {5, 2}) == LatticePoint{3, 1});
    CHECK(canonical_apex({0, 0}, {4, 1}) == LatticePoint{1, 0});
    CHECK(canonical_apex({0, 0}, {1, 0}) == LatticePoint{0, -1});
    CHECK(canonical_apex({0, 0}, {3, 2}) == LatticePoint{2, 1});
    CHECK(canonical_apex({0, 0}, {6, -1}) == LatticePoint{5, -1});
    CHECK(kind_of([] { canonical_apex({0, 0}, {4, 2}); }) == ErrorKind::Visibility);
    CHECK(kind_of([] { canonical_apex({1, 1}, {1, 1}); }) == ErrorKind::Visibility);
}

TEST_CASE("canonical_apex agrees with a strip scan") {
    const auto check_edge = [](LatticePoint u, LatticePoint v) {
        const auto scan = oracle::apex_by_scan(u, v);
        REQUIRE(scan.size() == 1);
        const auto w = canonical_apex(u, v);
        CHECK(w == scan.front());
        CHECK(oracle::cross3(u, w, v) == 1);  // u, w, v counter-clockwise with area 1/2
    };
    for (Coord p = 2; p <= 50; ++p) {
        for (Coord q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            check_edge({0, 0}, {p, q});
            check_edge({3, -7}, {3 + p, -7 + q});
            check_edge({0, 0}, {-p, q});
            check_edge({0, 0}, {p, -q});
            check_edge({0, 0}, {-q, -p});

            // Standard-frame recipe from the sign-split Bézout coefficients.
            if (q > 1) {
                const auto w = standard_frame_apex(p, q);
                CHECK(w == canonical_apex({0, 0}, {p, q}));
                CHECK(0 < w.x);
                CHECK(w.x < p);
                CHECK(0 < w.y);
                CHECK(w.y < q);
            }
        }
    }
    for (const LatticeVector d : {LatticeVector{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {1, -1},
                                  {-1, -1}}) {
        check_edge({2, 2}, LatticePoint{2, 2} + d);
    }
}

TEST_CASE("standard_frame_apex parameter checks") {
    CHECK(kind_of([] { standard_frame_apex(4, 2); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { standard_frame_apex(3, 1); }) == ErrorKind::Parameter);
    CHECK(kind_of([] { standard_frame_apex(2, 3); }) == ErrorKind::Parameter);
}

TEST_CASE("apex_candidates") {
    SUBCASE("unit square has none") {
        const auto sq = make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(apex_candidates(sq, i).empty());
            CHECK(feasible_offsets(sq, i).empty());
            CHECK_FALSE(canonical_candidate(sq, i).feasible);
        }
    }
    SUBCASE("canonical apex blocked but a shifted one is feasible") {
        const auto t = make_polygon({{-1, 0}, {0, 0}, {2, 1}});
        const auto c = canonical_candidate(t, 1);
        CHECK(c.w == LatticePoint{1, 0});
        CHECK(c.canonical);
        CHECK_FALSE(c.feasible);
        const auto range = feasible_offsets(t, 1);
        CHECK(range.lo == 1);
        CHECK(range.hi == 1);
        const auto all = apex_candidates(t, 1);
        REQUIRE(all.size() == 1);
        CHECK(all[0].w == LatticePoint{3, 1});
        CHECK(all[0].offset == 1);
        CHECK_FALSE(all[0].canonical);
        CHECK(all[0].feasible);
        CHECK(all[0].edge_index == 1);
    }
    SUBCASE("pentagon edge with a feasible canonical apex") {
        const auto p = make_polygon({{0, 1}, {1, 0}, {4, 2}, {4, 3}, {1, 4}});
        const auto i = p.find_edge({1, 0}, {4, 2});
        REQUIRE(i < p.size());
        const auto c = canonical_candidate(p, i);
        CHECK(c.w == LatticePoint{3, 1});
        CHECK(c.feasible);
        const auto all = apex_candidates(p, i);
        REQUIRE(all.size() == 1);
        CHECK(all[0].canonical);
    }
    SUBCASE("index checks") {
        const auto t = make_polygon({{0, 0}, {1, 0}, {0, 1}});
        CHECK(kind_of([&] { feasible_offsets(t, 3); }) == ErrorKind::Index);
        CHECK(kind_of([&] { apex_candidates(t, 7); }) == ErrorKind::Index);
        CHECK(kind_of([&] { canonical_candidate(t, 3); }) == ErrorKind::Index);
    }
}

TEST_CASE("feasible offsets match rebuilding the polygon") {
    for (const auto& p : corpus(13, 10, 300)) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto range = feasible_offsets(p, i);
            const auto expected = offsets_by_rebuild(p, i, 25);
            std::vector<Coord> got;
            for (const auto& c : apex_candidates(p, i)) {
                CHECK(oracle::cross3(p.vertex(i), c.w, p.vertex(i + 1)) == 1);
                CHECK(c.feasible);
                got.push_back(c.offset);
            }
            CHECK(got == expected);
            if (!range.empty()) {
                CHECK(range.lo == expected.front());
                CHECK(range.hi == expected.back());
            } else {
                CHECK(expected.empty());
            }
        }
    }
}
