#pragma once

#include <optional>
#include <string>

#include "latpoly/lattice.hpp"

namespace latpoly {

enum class RenderFormat { Svg, Tikz };

struct RenderOptions {
    RenderFormat format = RenderFormat::Svg;
    bool grid = false;
    bool highlight_interior = false;
    std::optional<ConvexLatticePolygon> overlay;  // drawn first, underneath
    int scale = 20;  // SVG pixels or TikZ points per lattice unit
    // Color names valid in both SVG and TikZ.
    std::string polygon_color = "red";
    std::string overlay_color = "blue";
};

/// SVG with mathematical y-up orientation; the viewBox is the bounding box of
/// everything drawn, padded by one lattice unit.
std::string render_svg(const ConvexLatticePolygon& polygon, const RenderOptions& options = {});

/// A tikzpicture environment in lattice coordinates.
std::string render_tikz(const ConvexLatticePolygon& polygon, const RenderOptions& options = {});

std::string render(const ConvexLatticePolygon& polygon, const RenderOptions& options);

}  // namespace latpoly
