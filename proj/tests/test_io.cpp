#include <string>

#include "doctest.h"
#include "latpoly/constructions.hpp"
#include "latpoly/enumeration.hpp"
#include "latpoly/error.hpp"
#include "latpoly/io.hpp"

using namespace latpoly;
using io::json;

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

}  // namespace

TEST_CASE("parse_points") {
    const std::vector<LatticePoint> tri{{0, 0}, {6, -1}, {5, 1}};
    CHECK(io::parse_points(R"({"vertices": [[0,0],[6,-1],[5,1]]})") == tri);
    CHECK(io::parse_points(R"({"points": [[0,0],[6,-1],[5,1]]})") == tri);
    CHECK(io::parse_points("# base\n0 0\n6 -1\n\n5, 1\n") == tri);
    CHECK(io::parse_points("").empty());

    CHECK(kind_of([] { io::parse_points(R"({"vertices": [[0,0.5],[1,0],[0,1]]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_points(R"({"vertices": [[0,0,0]]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_points(R"({"corners": []})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_points(R"({"vertices": [)"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_points("0 0\n1 x\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_points("0 0 0\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::parse_points("0 2000000\n"); }) == ErrorKind::Range);
}

TEST_CASE("parse_polygon validates") {
    CHECK(io::parse_polygon("5 1\n6 -1\n0 0\n") == base_collinear_triangle(5));
    CHECK(kind_of([] { io::parse_polygon("0 0\n2 0\n0 2\n"); }) == ErrorKind::Visibility);
    CHECK(kind_of([] { io::read_text("/nonexistent/polygon.json"); }) == ErrorKind::Parse);
}

TEST_CASE("json round trip") {
    for (const auto& p : corpus(9, 12, 200)) {
        CHECK(io::parse_polygon(io::to_json(p).dump()) == p);
        CHECK(io::parse_polygon(io::to_text(p)) == p);
    }
    const AffineMap f{2, 1, 1, 1, -3, 4};
    const auto j = io::to_json(f);
    CHECK(j["linear"] == json::parse("[[2,1],[1,1]]"));
    CHECK(j["translation"] == json::parse("[-3,4]"));
    CHECK(io::affine_from_json(j) == f);
    CHECK(kind_of([] { io::affine_from_json(json::parse(R"({"linear":[[1,0.5],[0,1]],"translation":[0,0]})")); }) ==
          ErrorKind::Unimodular);
    CHECK(kind_of([] { io::affine_from_json(json::parse(R"({"linear":[[1,0]],"translation":[0,0]})")); }) ==
          ErrorKind::Parse);
}

TEST_CASE("report keys") {
    const auto r = io::to_json(analyze(base_collinear_triangle(3)));
    for (const char* key : {"n", "B", "I", "area2", "interior_pts", "interior_collinear", "pick_ok", "coleman_ok"}) {
        CHECK(r.contains(key));
    }
    CHECK(r["B"] == 3);
    CHECK(r["I"] == 3);
    CHECK(r["area2"] == 7);
    CHECK(r["interior_pts"] == json::parse("[[1,0],[2,0],[3,0]]"));

    const auto c = io::to_json(classify(3));
    CHECK(c["achievable_n"] == json::parse("[3,4,5,6]"));
    CHECK(c["bounds"]["y_min"] == -1);
    CHECK(c["witnesses"].contains("6"));
}
