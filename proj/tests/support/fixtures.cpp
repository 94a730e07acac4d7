#include "support/fixtures.hpp"

#include <algorithm>
#include <array>

#include "homcoord/errors.hpp"

namespace homcoord::testing {

namespace {

Chain chain_of_edges(const SimplicialComplex& k,
                     const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Chain z{1, Bitset(k.size(1))};
  for (auto [u, v] : edges) {
    const std::array<VertexId, 2> verts{u, v};
    z.members.set(*k.find(1, verts));
  }
  return z;
}

}  // namespace

std::string two_holes_text() {
  return R"(# Disk with two square holes left and right of a central wall (8-9-10).
# Edges come first (ids 0..13); the last four are the non-tree edges of the
# breadth-first spanning tree rooted at vertex 0.
0 1
0 2
0 7
0 8
1 3
2 4
8 9
3 5
4 6
9 10
1 7
5 10
6 10
5 6
# Filled faces: the lower-left ear and the cap between the holes.
0 1 7
5 6 10
)";
}

TwoHoles two_holes() {
  TwoHoles f;
  f.k = parse_complex(two_holes_text());
  f.e1 = *f.k.find(1, std::array<VertexId, 2>{1, 7});
  f.e2 = *f.k.find(1, std::array<VertexId, 2>{5, 10});
  f.e3 = *f.k.find(1, std::array<VertexId, 2>{6, 10});
  f.e4 = *f.k.find(1, std::array<VertexId, 2>{5, 6});
  f.outer = chain_of_edges(f.k, {{0, 1}, {1, 3}, {3, 5}, {5, 6}, {4, 6}, {2, 4}, {0, 2}});
  f.e2e3e4 = chain_of_edges(f.k, {{5, 10}, {6, 10}, {5, 6}});
  return f;
}

SimplicialComplex torus7() {
  std::vector<std::array<VertexId, 3>> tris;
  for (VertexId i = 0; i < 7; ++i) {
    std::array<VertexId, 3> a{i, static_cast<VertexId>((i + 1) % 7),
                              static_cast<VertexId>((i + 3) % 7)};
    std::array<VertexId, 3> b{i, static_cast<VertexId>((i + 2) % 7),
                              static_cast<VertexId>((i + 3) % 7)};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    tris.push_back(a);
    tris.push_back(b);
  }
  std::sort(tris.begin(), tris.end());
  ComplexBuilder builder;
  for (const auto& t : tris) builder.add({t[0], t[1], t[2]});
  return std::move(builder).build();
}

SimplicialComplex annulus_prism() {
  ComplexBuilder builder;
  builder.add({0, 1, 3}).add({1, 3, 4}).add({1, 2, 4}).add({2, 4, 5}).add({0, 2, 5}).add(
      {0, 3, 5});
  return std::move(builder).build();
}

SimplicialComplex hollow_tetrahedron() {
  ComplexBuilder builder;
  builder.add({0, 1, 2}).add({0, 1, 3}).add({0, 2, 3}).add({1, 2, 3});
  return std::move(builder).build();
}

SimplicialComplex solid_tetrahedron() {
  ComplexBuilder builder;
  builder.add({0, 1, 2, 3});
  return std::move(builder).build();
}

SimplicialComplex grid_complex(int rows, int cols, int holes, bool unit_weights) {
  if (rows < 2 || cols < 2) throw Error("grid_complex: need at least a 2x2 grid");
  auto vid = [cols](int r, int c) { return static_cast<VertexId>(r * cols + c); };

  // Hole cells: interior cells only, so dropping a lower triangle leaves all
  // of its edges covered by neighbouring faces (a genuine hole, not a notch).
  std::vector<std::pair<int, int>> hole_cells;
  if (holes > 0) {
    std::vector<std::pair<int, int>> interior;
    for (int r = 1; r + 2 < rows; ++r)
      for (int c = 1; c + 2 < cols; ++c) interior.push_back({r, c});
    if (static_cast<std::size_t>(holes) > interior.size())
      throw Error("grid_complex: not enough interior cells for the requested holes");
    const std::size_t step = interior.size() / static_cast<std::size_t>(holes);
    for (int i = 0; i < holes; ++i) hole_cells.push_back(interior[i * step]);
  }

  ComplexBuilder builder;
  auto weight = [&](int r, int c) {
    return unit_weights ? 1.0 : 1.0 + static_cast<double>((r * 31 + c * 17) % 9);
  };
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) {
      const VertexId a = vid(r, c), b = vid(r, c + 1);
      const VertexId d = vid(r + 1, c), e = vid(r + 1, c + 1);
      std::array<VertexId, 3> upper{a, b, d};
      std::array<VertexId, 3> lower{b, d, e};
      std::sort(upper.begin(), upper.end());
      std::sort(lower.begin(), lower.end());
      builder.add({upper[0], upper[1], upper[2]}, weight(r, c));
      if (std::find(hole_cells.begin(), hole_cells.end(), std::make_pair(r, c)) ==
          hole_cells.end())
        builder.add({lower[0], lower[1], lower[2]}, weight(r, c));
    }
  return std::move(builder).build();
}

}  // namespace homcoord::testing
