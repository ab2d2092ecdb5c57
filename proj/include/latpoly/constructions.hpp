#pragma once

#include "latpoly/lattice.hpp"

namespace latpoly {

/// conv{(0,0), (k+1,-1), (k,1)}: interior lattice points exactly (1,0)..(k,0).
ConvexLatticePolygon base_collinear_triangle(Coord k);

/// n in {3,4,5,6}: the base triangle with canonical primitive triangles glued
/// onto its edges in turn. Interior points stay (1,0)..(k,0).
ConvexLatticePolygon collinear_ngon(Coord k, int n);

/// Quadrilateral with k interior points that do not lie on one line.
ConvexLatticePolygon pk(Coord k);

/// n in {4,5,6}: pk(k), then canonical appends on the edge leaving the origin
/// and on the edge into (1,2).
ConvexLatticePolygon noncollinear_ngon(Coord k, int n);

}  // namespace latpoly
