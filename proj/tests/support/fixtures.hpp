#pragma once

#include <string>
#include <vector>

#include "homcoord/complex.hpp"

namespace homcoord::testing {

/// Disk with two holes, built to mirror the worked annotation example: four
/// sentinel edges under the breadth-first spanning tree from vertex 0, the
/// second and third of which generate the homology basis. The filled triangle
/// {e2, e3, e4} and the outer boundary are the interesting cycles.
struct TwoHoles {
  SimplicialComplex k;
  SimplexId e1, e2, e3, e4;  // sentinel edge ids, in id order
  Chain outer;               // outer boundary cycle
  Chain e2e3e4;              // the filled triangle {e2, e3, e4}
};

/// The complex file text for the two-holes fixture (also shipped in data/).
std::string two_holes_text();
TwoHoles two_holes();

/// Minimal 7-vertex torus triangulation (14 triangles on K7), unit weights.
SimplicialComplex torus7();

/// Triangulated annulus: two triangles' worth of rim vertices, 6 faces, g = 1.
SimplicialComplex annulus_prism();

SimplicialComplex hollow_tetrahedron();
SimplicialComplex solid_tetrahedron();

/// rows x cols vertex grid, each cell split into two triangles; `holes` cells
/// keep their lower triangle open (spread deterministically), so the first
/// Betti number equals holes.
SimplicialComplex grid_complex(int rows, int cols, int holes = 0,
                               bool unit_weights = true);

}  // namespace homcoord::testing
