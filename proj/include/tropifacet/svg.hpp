#pragma once

#include <array>
#include <string>
#include <vector>

#include "tropifacet/polytope.hpp"

namespace tropifacet {

/// Bounded cells of the natural cell decomposition of a 3-dimensional
/// instance, in the plane coordinates (x2 - x1, x3 - x1).
struct CellComplex {
    using PlanePoint = std::array<Rat, 2>;

    std::vector<PlanePoint> vertices;  // pseudovertices (the bounded 0-cells)
    struct Edge {
        TypeVector type;
        std::array<PlanePoint, 2> segment;
    };
    std::vector<Edge> edges;  // bounded 1-cells
    struct Face {
        TypeVector type;
        std::vector<PlanePoint> polygon;  // counterclockwise
    };
    std::vector<Face> faces;  // bounded 2-cells
};

/// Enumerates the bounded cells by exact sampling of the line arrangement
/// carrying the decomposition. Requires dimension 3.
CellComplex enumerate_plane_cells(const PolytopeRat& P, const Budget& budget = {});

struct SvgOptions {
    bool halfspaces = false;  // draw the canonical representation boundaries
};

/// SVG 1.1 drawing of generators, bounded cells and pseudovertices.
std::string render_svg(const PolytopeRat& P, const SvgOptions& options = {},
                       const Budget& budget = {});

}  // namespace tropifacet
