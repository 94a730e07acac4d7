#pragma once

#include <vector>

#include "homcoord/annotate.hpp"
#include "homcoord/complex.hpp"

namespace homcoord {

/// Single-source shortest-path tree over the weighted 1-skeleton.
/// Vertices settle in (distance, vertex id) order and each vertex's parent is
/// the smallest-id optimal predecessor settled before it, so the tree is a
/// deterministic function of the complex.
struct ShortestPathTree {
  VertexId source = 0;
  std::vector<double> dist;
  std::vector<VertexId> parent;        // parent[source] == source
  std::vector<SimplexId> parent_edge;  // meaningless at the source
  std::vector<VertexId> order;         // settle order
  std::vector<SimplexId> tree_edges;   // increasing
};

ShortestPathTree shortest_path_tree(const SimplicialComplex& k, VertexId source);

/// Homology label per vertex: the root gets zero and every other vertex its
/// parent's label XOR the parent edge's annotation.
std::vector<Bitset> annotate_tree_vertices(const ShortestPathTree& tree,
                                           const AnnotationIndex& idx);

/// One candidate short cycle: non-tree edge xy of the shortest-path tree from
/// `source`, closed through the tree. The weight counts both tree paths in
/// full (they may overlap); the annotation is that of the resulting cycle.
struct CandidateCycle {
  VertexId source = 0;
  SimplexId edge = 0;
  double weight = 0.0;
  Bitset annotation;
};

/// The candidate pool: one entry per (source vertex, non-tree edge) pair.
/// Per-source work is independent and runs on `threads` threads; the result
/// is identical for every thread count.
std::vector<CandidateCycle> candidate_cycles(const SimplicialComplex& k,
                                             const AnnotationIndex& idx, int threads = 1);

struct BasisCycle {
  CandidateCycle candidate;
  Chain cycle;  // materialized edge set (tree-path overlaps cancelled)
};

struct HomologyBasisResult {
  std::vector<BasisCycle> cycles;  // g entries, in selection order
  double total_weight = 0.0;
};

/// Shortest homology basis of H_1: candidates sorted by (weight, source,
/// edge), then the block-iterated earliest basis of their annotation matrix.
HomologyBasisResult shortest_homology_basis(const SimplicialComplex& k,
                                            const AnnotationIndex& idx, int threads = 1);
/// Convenience overload that builds the annotation index itself (p = 1).
HomologyBasisResult shortest_homology_basis(const SimplicialComplex& k, int threads = 1);

}  // namespace homcoord
