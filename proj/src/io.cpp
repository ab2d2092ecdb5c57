#include "latpoly/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "latpoly/error.hpp"

namespace latpoly::io {

namespace {

Coord integer_field(const json& value, ErrorKind kind, const char* what) {
    if (!value.is_number_integer()) {
        throw Error(kind, std::string(what) + " must be an integer, got " + value.dump());
    }
    return value.get<Coord>();
}

LatticePoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::Parse, "expected [x, y], got " + j.dump());
    LatticePoint p{integer_field(j[0], ErrorKind::Parse, "coordinate"),
                   integer_field(j[1], ErrorKind::Parse, "coordinate")};
    check_range(p);
    return p;
}

std::vector<LatticePoint> parse_plain(std::string_view text) {
    std::vector<LatticePoint> out;
    std::istringstream lines{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(lines, line)) {
        ++number;
        std::replace(line.begin(), line.end(), ',', ' ');
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        LatticePoint p;
        std::string rest;
        if (!(fields >> p.x >> p.y) || (fields >> rest)) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(number) + ": expected \"x y\"");
        }
        check_range(p);
        out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<LatticePoint> parse_points(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos || text[first] != '{') return parse_plain(text);

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    const json* list = nullptr;
    if (doc.contains("vertices")) list = &doc["vertices"];
    else if (doc.contains("points")) list = &doc["points"];
    if (list == nullptr || !list->is_array()) {
        throw Error(ErrorKind::Parse, "expected an object with a \"vertices\" array");
    }
    std::vector<LatticePoint> out;
    for (const auto& item : *list) out.push_back(point_from_json(item));
    return out;
}

ConvexLatticePolygon parse_polygon(std::string_view text) { return make_polygon(parse_points(text)); }

std::string read_text(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json to_json(LatticePoint p) { return json::array({p.x, p.y}); }

json to_json(std::span<const LatticePoint> points) {
    json out = json::array();
    for (const auto& p : points) out.push_back(to_json(p));
    return out;
}

json to_json(const ConvexLatticePolygon& polygon) { return {{"vertices", to_json(polygon.vertices())}}; }

json to_json(const AnalysisReport& r) {
    return {{"n", r.n},
            {"B", r.boundary},
            {"I", r.interior},
            {"area2", r.area2},
            {"interior_pts", to_json(r.interior_pts)},
            {"interior_collinear", r.interior_collinear},
            {"pick_ok", r.pick_ok},
            {"coleman_ok", r.coleman_ok}};
}

json to_json(const AffineMap& f) {
    return {{"linear", json::array({json::array({f.m11, f.m12}), json::array({f.m21, f.m22})})},
            {"translation", json::array({f.tx, f.ty})}};
}

AffineMap affine_from_json(const json& j) {
    const auto& a = j.at("linear");
    const auto& t = j.at("translation");
    if (!a.is_array() || a.size() != 2 || !a[0].is_array() || a[0].size() != 2 || !a[1].is_array() ||
        a[1].size() != 2 || !t.is_array() || t.size() != 2) {
        throw Error(ErrorKind::Parse, "expected {\"linear\": [[a,b],[c,d]], \"translation\": [x,y]}");
    }
    AffineMap f;
    f.m11 = integer_field(a[0][0], ErrorKind::Unimodular, "matrix entry");
    f.m12 = integer_field(a[0][1], ErrorKind::Unimodular, "matrix entry");
    f.m21 = integer_field(a[1][0], ErrorKind::Unimodular, "matrix entry");
    f.m22 = integer_field(a[1][1], ErrorKind::Unimodular, "matrix entry");
    f.tx = integer_field(t[0], ErrorKind::Unimodular, "translation");
    f.ty = integer_field(t[1], ErrorKind::Unimodular, "translation");
    return f;
}

json to_json(const ApexCandidate& c) {
    return {{"apex", to_json(c.w)},
            {"edge", c.edge_index},
            {"offset", c.offset},
            {"canonical", c.canonical},
            {"feasible", c.feasible}};
}

json to_json(const AppendReport& r) {
    return {{"edge", r.edge_index},
            {"apex", to_json(r.apex)},
            {"canonical", r.canonical_used},
            {"before", to_json(r.before)},
            {"after", to_json(r.after)}};
}

json to_json(const SaturationResult& result) {
    json steps = json::array();
    for (const auto& s : result.steps) steps.push_back(to_json(s));
    return {{"appends", steps},
            {"sweeps", result.sweeps},
            {"derived_edge_appends", result.derived_edge_appends},
            {"polygon", to_json(result.final_polygon)}};
}

json to_json(const AppendOnceReport& r) {
    json bad = json::array();
    for (const auto& v : r.counterexamples) {
        bad.push_back({{"polygon", to_json(v.polygon)},
                       {"edge", v.edge_index},
                       {"apex", to_json(v.apex)},
                       {"new_edge", json::array({to_json(v.new_edge_from), to_json(v.new_edge_to)})},
                       {"canonical_allowed", v.canonical_allowed},
                       {"feasible_candidates", v.feasible_candidates}});
    }
    return {{"appends_checked", r.appends_checked},
            {"derived_edge_appends", r.derived_edge_appends},
            {"counterexamples", bad}};
}

json to_json(const ClassificationReport& r) {
    json counts = json::object();
    json witnesses = json::object();
    for (const auto& [n, c] : r.count_per_n) counts[std::to_string(n)] = c;
    for (const auto& [n, p] : r.witnesses) witnesses[std::to_string(n)] = to_json(p);
    return {{"k", r.k},
            {"achievable_n", r.achievable_n},
            {"counts", counts},
            {"witnesses", witnesses},
            {"bounds", {{"x_margin", r.x_margin}, {"x_min", r.x_min}, {"x_max", r.x_max},
                        {"y_min", -1}, {"y_max", 1}}}};
}

std::string to_text(const ConvexLatticePolygon& polygon) {
    std::ostringstream out;
    for (const auto& p : polygon.vertices()) out << p.x << ' ' << p.y << '\n';
    return out.str();
}

}  // namespace latpoly::io
