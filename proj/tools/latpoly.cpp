// latpoly: command-line front end for the convex lattice polygon toolkit.
//
// Exit codes: 0 success, 2 invalid input or parameters, 3 a verification
// found a counterexample.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "latpoly/affine.hpp"
#include "latpoly/append.hpp"
#include "latpoly/bezout.hpp"
#include "latpoly/constructions.hpp"
#include "latpoly/enumeration.hpp"
#include "latpoly/error.hpp"
#include "latpoly/io.hpp"
#include "latpoly/render.hpp"

namespace {

using namespace latpoly;
using io::json;

constexpr int kExitInvalid = 2;
constexpr int kExitCounterexample = 3;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

LatticePoint parse_apex(const std::string& text) {
    auto pts = io::parse_points(text);
    if (pts.size() != 1) throw Error(ErrorKind::Parse, "--apex expects x,y");
    return pts.front();
}

int run_verify_classification(Coord k, std::optional<Coord> kmax, Coord margin) {
    const Coord last = kmax.value_or(k);
    if (last < k) throw Error(ErrorKind::Parameter, "--kmax must be at least --k");
    json reports = json::array();
    bool ok = true;
    for (Coord kk = k; kk <= last; ++kk) {
        auto report = classify(kk, margin);
        ok = ok && report.achievable_n == std::set<int>{3, 4, 5, 6};
        reports.push_back(io::to_json(report));
    }
    print({{"reports", reports}, {"matches_3_to_6", ok}});
    return ok ? 0 : kExitCounterexample;
}

int run_verify_append_once(std::uint64_t seed, std::size_t count, Coord box) {
    std::size_t checked = 0;
    std::size_t derived = 0;
    json bad = json::array();
    for (const auto& p : corpus(seed, box, count)) {
        const auto r = verify_append_once(p);
        checked += r.appends_checked;
        derived += r.derived_edge_appends;
        if (!r.counterexamples.empty()) bad.push_back(io::to_json(r));
    }
    print({{"polygons", count},
           {"appends_checked", checked},
           {"derived_edge_appends", derived},
           {"counterexamples", bad}});
    return bad.empty() ? 0 : kExitCounterexample;
}

int run_verify_coleman(std::uint64_t seed, std::size_t count, Coord box) {
    json bad = json::array();
    for (const auto& p : corpus(seed, box, count)) {
        const auto r = analyze(p);
        const bool rabinowitz = !(r.boundary == 5 && r.interior < 1) && !(r.boundary == 7 && r.interior < 4);
        if (!r.coleman_ok || !r.pick_ok || !rabinowitz) bad.push_back(io::to_json(p));
    }
    print({{"polygons", count}, {"counterexamples", bad}});
    return bad.empty() ? 0 : kExitCounterexample;
}

int run_verify_strip(Coord k, const StripRegion& region) {
    const auto found = strip_violation_search(k, region);
    print({{"k", k},
           {"region", {{"x_min", region.x_min}, {"x_max", region.x_max},
                       {"y_min", region.y_min}, {"y_max", region.y_max}}},
           {"counterexample", found ? io::to_json(*found) : json(nullptr)}});
    return found ? kExitCounterexample : 0;
}

int run_verify_orders(const std::string& file) {
    const auto p = io::parse_polygon(io::read_text(file));
    const auto r = saturation_order_range(p);
    print({{"min_appends", r.min_appends}, {"max_appends", r.max_appends}, {"states", r.states}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for convex lattice polygons"};
    app.require_subcommand(1);

    std::string file;
    std::size_t edge = 0;
    bool all = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Boundary/interior counts, area and checks");
    analyze_cmd->add_option("file", file, "Polygon file (JSON or \"x y\" lines, - for stdin)")->required();

    auto* apex_cmd = app.add_subcommand("apex", "Nearest exterior lattice point of an edge");
    apex_cmd->add_option("file", file)->required();
    apex_cmd->add_option("--edge", edge, "Edge index in canonical vertex order")->required();
    apex_cmd->add_flag("--all", all, "List every feasible apex on the minimal-distance line");

    std::optional<std::string> apex_text;
    bool do_saturate = false;
    auto* append_cmd = app.add_subcommand("append", "Glue primitive triangles onto edges");
    append_cmd->add_option("file", file)->required();
    auto* edge_opt = append_cmd->add_option("--edge", edge, "Edge index in canonical vertex order");
    append_cmd->add_option("--apex", apex_text, "Explicit apex as x,y")->needs(edge_opt);
    auto* sat_flag = append_cmd->add_flag("--saturate", do_saturate, "Append until no edge allows it");
    edge_opt->excludes(sat_flag);

    std::string family;
    Coord k = 0;
    int n = 0;
    auto* construct_cmd = app.add_subcommand("construct", "Explicit n-gons with k interior points");
    construct_cmd->add_option("family", family)->required()->check(CLI::IsMember({"collinear", "noncollinear"}));
    construct_cmd->add_option("--k", k)->required();
    construct_cmd->add_option("--n", n)->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "Map consecutive collinear points to (1,0)..(k,0)");
    normalize_cmd->add_option("file", file)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive and corpus checks");
    verify_cmd->require_subcommand(1);
    std::optional<Coord> kmax;
    Coord margin = 2;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    Coord box = 16;
    StripRegion region{-5, 0, -4, 4};
    bool region_x_max_set = false;

    auto* v_class = verify_cmd->add_subcommand("classification", "Achievable n for collinear interiors");
    v_class->add_option("--k", k)->required();
    v_class->add_option("--kmax", kmax);
    v_class->add_option("--margin", margin);
    auto* v_once = verify_cmd->add_subcommand("append-once", "At most one primitive triangle per edge");
    auto* v_coleman = verify_cmd->add_subcommand("coleman", "B <= 2I - n + 10 on a corpus");
    for (auto* sub : {v_once, v_coleman}) {
        sub->add_option("--seed", seed);
        sub->add_option("--count", count);
        sub->add_option("--box", box);
    }
    auto* v_strip = verify_cmd->add_subcommand("strip", "No vertex at |y| >= 2 for axis interiors");
    v_strip->add_option("--k", k)->required();
    v_strip->add_option("--x-min", region.x_min);
    v_strip->add_option("--x-max", region.x_max)->each([&](const std::string&) { region_x_max_set = true; });
    v_strip->add_option("--y-min", region.y_min);
    v_strip->add_option("--y-max", region.y_max);
    auto* v_orders = verify_cmd->add_subcommand("orders", "Fewest/most appends over all orders (n <= 8)");
    v_orders->add_option("file", file)->required();

    std::string format = "svg";
    std::optional<std::string> overlay_file;
    RenderOptions render_options;
    auto* render_cmd = app.add_subcommand("render", "SVG or TikZ figure on standard output");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "tikz"}));
    render_cmd->add_flag("--grid", render_options.grid);
    render_cmd->add_flag("--interior", render_options.highlight_interior);
    render_cmd->add_option("--overlay", overlay_file);
    render_cmd->add_option("--scale", render_options.scale);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*analyze_cmd) {
            print(io::to_json(analyze(io::parse_polygon(io::read_text(file)))));
        } else if (*apex_cmd) {
            const auto p = io::parse_polygon(io::read_text(file));
            const auto canonical = canonical_candidate(p, edge);
            json out = {{"edge", edge}, {"canonical", io::to_json(canonical)}};
            if (all) {
                json list = json::array();
                for (const auto& c : apex_candidates(p, edge)) list.push_back(io::to_json(c));
                out["candidates"] = list;
            }
            print(out);
        } else if (*append_cmd) {
            const auto p = io::parse_polygon(io::read_text(file));
            if (do_saturate) {
                print(io::to_json(saturate(p)));
            } else if (*edge_opt) {
                std::optional<LatticePoint> apex;
                if (apex_text) apex = parse_apex(*apex_text);
                const auto report = append(p, edge, apex);
                auto out = io::to_json(report);
                out["polygon"] = io::to_json(report.after);
                print(out);
            } else {
                throw Error(ErrorKind::Parameter, "append needs --edge or --saturate");
            }
        } else if (*construct_cmd) {
            const auto p = family == "collinear" ? collinear_ngon(k, n) : noncollinear_ngon(k, n);
            print(io::to_json(p));
        } else if (*normalize_cmd) {
            const auto pts = io::parse_points(io::read_text(file));
            const auto f = normalize_collinear(pts);
            json image = json::array();
            for (const auto& q : pts) image.push_back(io::to_json(f(q)));
            print({{"map", io::to_json(f)}, {"points", image}});
        } else if (*v_class) {
            return run_verify_classification(k, kmax, margin);
        } else if (*v_once) {
            return run_verify_append_once(seed, count, box);
        } else if (*v_coleman) {
            return run_verify_coleman(seed, count, box);
        } else if (*v_strip) {
            if (!region_x_max_set) region.x_max = k + 7;
            return run_verify_strip(k, region);
        } else if (*v_orders) {
            return run_verify_orders(file);
        } else if (*render_cmd) {
            const auto p = io::parse_polygon(io::read_text(file));
            render_options.format = format == "svg" ? RenderFormat::Svg : RenderFormat::Tikz;
            if (overlay_file) render_options.overlay = io::parse_polygon(io::read_text(*overlay_file));
            std::cout << render(p, render_options);
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitInvalid;
    }
    return 0;
}
