#include "latpoly/render.hpp"

#include <algorithm>
#include <sstream>

#include "latpoly/error.hpp"

namespace latpoly {

namespace {

struct Box {
    Coord x0, y0, x1, y1;
};

Box padded_box(const ConvexLatticePolygon& polygon, const RenderOptions& options) {
    Box b{polygon.vertex(0).x, polygon.vertex(0).y, polygon.vertex(0).x, polygon.vertex(0).y};
    auto grow = [&b](const ConvexLatticePolygon& p) {
        for (const auto& v : p.vertices()) {
            b.x0 = std::min(b.x0, v.x);
            b.y0 = std::min(b.y0, v.y);
            b.x1 = std::max(b.x1, v.x);
            b.y1 = std::max(b.y1, v.y);
        }
    };
    grow(polygon);
    if (options.overlay) grow(*options.overlay);
    return {b.x0 - 1, b.y0 - 1, b.x1 + 1, b.y1 + 1};
}

void require_scale(const RenderOptions& options) {
    if (options.scale < 1) throw Error(ErrorKind::Parameter, "scale must be at least 1");
}

// SVG user units; y flipped so that lattice y grows upwards.
std::string svg_points(const ConvexLatticePolygon& p, Coord s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ' ';
        out << p.vertex(i).x * s << ',' << -p.vertex(i).y * s;
    }
    return out.str();
}

std::string tikz_path(const ConvexLatticePolygon& p) {
    std::ostringstream out;
    for (const auto& v : p.vertices()) out << '(' << v.x << ',' << v.y << ") -- ";
    out << "cycle";
    return out.str();
}

}  // namespace

std::string render_svg(const ConvexLatticePolygon& polygon, const RenderOptions& options) {
    require_scale(options);
    const Coord s = options.scale;
    const Box b = padded_box(polygon, options);
    const Coord width = (b.x1 - b.x0) * s;
    const Coord height = (b.y1 - b.y0) * s;
    const Coord stroke = std::max<Coord>(1, s / 10);
    const Coord dot = std::max<Coord>(1, s / 10);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"" << b.x0 * s << ' ' << -b.y1 * s << ' ' << width << ' ' << height << "\">\n";
    if (options.grid) {
        out << "  <g class=\"grid\" fill=\"gray\">\n";
        for (Coord y = b.y1; y >= b.y0; --y) {
            for (Coord x = b.x0; x <= b.x1; ++x) {
                out << "    <circle cx=\"" << x * s << "\" cy=\"" << -y * s << "\" r=\"" << dot << "\"/>\n";
            }
        }
        out << "  </g>\n";
    }
    if (options.overlay) {
        out << "  <polygon class=\"overlay\" points=\"" << svg_points(*options.overlay, s)
            << "\" fill=\"none\" stroke=\"" << options.overlay_color << "\" stroke-width=\"" << stroke
            << "\"/>\n";
    }
    out << "  <polygon class=\"polygon\" points=\"" << svg_points(polygon, s) << "\" fill=\"none\" stroke=\""
        << options.polygon_color << "\" stroke-width=\"" << stroke << "\"/>\n";
    if (options.highlight_interior) {
        for (const auto& p : interior_points(polygon)) {
            out << "  <circle class=\"interior\" cx=\"" << p.x * s << "\" cy=\"" << -p.y * s << "\" r=\""
                << 2 * dot << "\" fill=\"black\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_tikz(const ConvexLatticePolygon& polygon, const RenderOptions& options) {
    require_scale(options);
    const Box b = padded_box(polygon, options);
    std::ostringstream out;
    out << "\\begin{tikzpicture}[x=" << options.scale << "pt,y=" << options.scale << "pt]\n";
    if (options.grid) {
        for (Coord y = b.y0; y <= b.y1; ++y) {
            for (Coord x = b.x0; x <= b.x1; ++x) {
                out << "  \\fill[gray] (" << x << ',' << y << ") circle (0.5pt);\n";
            }
        }
    }
    if (options.overlay) {
        out << "  \\draw[thick," << options.overlay_color << "] " << tikz_path(*options.overlay) << ";\n";
    }
    out << "  \\draw[thick," << options.polygon_color << "] " << tikz_path(polygon) << ";\n";
    if (options.highlight_interior) {
        for (const auto& p : interior_points(polygon)) {
            out << "  \\fill (" << p.x << ',' << p.y << ") circle (1.5pt);\n";
        }
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
}

std::string render(const ConvexLatticePolygon& polygon, const RenderOptions& options) {
    return options.format == RenderFormat::Svg ? render_svg(polygon, options) : render_tikz(polygon, options);
}

}  // namespace latpoly
