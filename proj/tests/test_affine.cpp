#include <random>
#include <vector>

#include "doctest.h"
#include "latpoly/affine.hpp"
#include "latpoly/enumeration.hpp"
#include "latpoly/error.hpp"
#include "oracles.hpp"

using namespace latpoly;

namespace {

ErrorKind error_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected latpoly::Error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("apply_map") {
    const auto t = make_polygon({{0, 0}, {1, 0}, {0, 1}});
    CHECK(apply_map(AffineMap::identity(), t) == t);

    const AffineMap shear{1, 1, 0, 1, 0, 0};
    const auto img = apply_map(shear, t);
    CHECK(img == make_polygon({{0, 0}, {1, 0}, {1, 1}}));
    CHECK(analyze(img).boundary == 3);
    CHECK(analyze(img).interior == 0);

    CHECK(error_of([&] { apply_map(AffineMap{2, 0, 0, 1, 0, 0}, t); }) == ErrorKind::Unimodular);

    SUBCASE("reflection keeps counter-clockwise order") {
        const AffineMap flip{1, 0, 0, -1, 0, 0};
        const auto base = make_polygon({{0, 0}, {6, -1}, {5, 1}});
        const auto r = apply_map(flip, base);
        CHECK(r == make_polygon({{0, 0}, {6, 1}, {5, -1}}));
        CHECK(area2(r) == 11);
    }
}

TEST_CASE("invert_map") {
    CHECK(invert_map(AffineMap::identity()) == AffineMap::identity());
    CHECK(invert_map(AffineMap{1, 1, 0, 1, 0, 0}) == AffineMap{1, -1, 0, 1, 0, 0});
    const AffineMap f{0, 1, -1, 1, 0, 0};
    const AffineMap g = invert_map(f);
    CHECK(g == AffineMap{1, -1, 1, 0, 0, 0});
    CHECK(compose(f, g) == AffineMap::identity());
    CHECK(compose(g, f) == AffineMap::identity());
    CHECK(error_of([] { invert_map(AffineMap{2, 0, 0, 1, 0, 0}); }) == ErrorKind::Unimodular);

    SUBCASE("random maps fix a grid after composing with the inverse") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 300; ++trial) {
            const auto f = random_unimodular_map(rng);
            CHECK(f.is_unimodular());
            const auto g = invert_map(f);
            for (Coord x = -4; x <= 4; ++x) {
                for (Coord y = -4; y <= 4; ++y) {
                    CHECK(g(f({x, y})) == LatticePoint{x, y});
                    CHECK(f(g({x, y})) == LatticePoint{x, y});
                }
            }
        }
    }
}

TEST_CASE("normalize_collinear examples") {
    {
        const std::vector<LatticePoint> pts{{1, 1}, {2, 2}, {3, 3}};
        const auto f = normalize_collinear(pts);
        CHECK(f == AffineMap{0, 1, -1, 1, 0, 0});
        CHECK(f.det() == 1);
        CHECK(f(pts[0]) == LatticePoint{1, 0});
        CHECK(f(pts[1]) == LatticePoint{2, 0});
        CHECK(f(pts[2]) == LatticePoint{3, 0});
    }
    {
        const std::vector<LatticePoint> pts{{0, 0}, {1, 0}, {2, 0}};
        CHECK(normalize_collinear(pts) == AffineMap{1, 0, 0, 1, 1, 0});
    }
    {
        const std::vector<LatticePoint> pts{{0, 1}, {0, 2}, {0, 3}};
        const auto f = normalize_collinear(pts);
        CHECK(f.is_unimodular());
        CHECK(f(pts[0]) == LatticePoint{1, 0});
        CHECK(f(pts[2]) == LatticePoint{3, 0});
    }
}

TEST_CASE("normalize_collinear errors") {
    const std::vector<LatticePoint> bent{{0, 0}, {1, 1}, {2, 3}};
    CHECK(error_of([&] { normalize_collinear(bent); }) == ErrorKind::Collinearity);
    const std::vector<LatticePoint> gap{{0, 0}, {2, 2}, {4, 4}};
    CHECK(error_of([&] { normalize_collinear(gap); }) == ErrorKind::Spacing);
    const std::vector<LatticePoint> skipped{{0, 0}, {1, 1}, {3, 3}};
    CHECK(error_of([&] { normalize_collinear(skipped); }) == ErrorKind::Spacing);
    const std::vector<LatticePoint> one{{0, 0}};
    CHECK(error_of([&] { normalize_collinear(one); }) == ErrorKind::Parameter);
}

TEST_CASE("normalize_collinear on random lattice lines") {
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 500) {
        const Coord p = static_cast<Coord>(rng() % 41) - 20;
        const Coord q = static_cast<Coord>(rng() % 41) - 20;
        if (gcd(p, q) != 1) continue;
        const LatticePoint start{static_cast<Coord>(rng() % 101) - 50, static_cast<Coord>(rng() % 101) - 50};
        const std::size_t k = 2 + rng() % 9;
        std::vector<LatticePoint> pts;
        for (std::size_t i = 0; i < k; ++i) pts.push_back(start + static_cast<Coord>(i) * LatticeVector{p, q});
        const auto f = normalize_collinear(pts);
        CHECK(f.is_unimodular());
        for (std::size_t i = 0; i < k; ++i) CHECK(f(pts[i]) == LatticePoint{static_cast<Coord>(i) + 1, 0});
        ++done;
    }
}

TEST_CASE("unimodular maps preserve the invariants") {
    const auto polygons = corpus(3, 10, 200);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& p = polygons[static_cast<std::size_t>(trial) % polygons.size()];
        const auto f = random_unimodular_map(rng);
        const auto a = analyze(p);
        const auto b = analyze(apply_map(f, p));
        CHECK(a.n == b.n);
        CHECK(a.boundary == b.boundary);
        CHECK(a.interior == b.interior);
        CHECK(a.area2 == b.area2);
        CHECK(a.interior_collinear == b.interior_collinear);

        // Collinearity of triples is preserved both ways.
        const auto pts = oracle::random_points(rng, 3, -5, 5);
        CHECK((oracle::cross3(pts[0], pts[1], pts[2]) == 0) ==
              (oracle::cross3(f(pts[0]), f(pts[1]), f(pts[2])) == 0));
    }
}
