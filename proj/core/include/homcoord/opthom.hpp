#pragma once

#include <cstdint>
#include <vector>

#include "homcoord/annotate.hpp"
#include "homcoord/complex.hpp"

namespace homcoord {

/// Implicit 2^g-sheeted cover of the 1-skeleton: lifted vertex (v, h) has id
/// (v << g) | h and walking edge e moves h to h XOR the edge's annotation.
/// Distances between lifts depend only on the class difference (deck
/// symmetry), which is what makes per-class shortest walks well defined.
struct CoveringGraph {
  std::size_t g = 0;
  std::size_t sheets = 1;           // 2^g
  std::size_t lifted_vertices = 0;  // n_0 * 2^g
  std::vector<std::uint32_t> edge_class;  // per base edge: annotation as bit mask
};

/// Throws CapabilityError (with a memory estimate) when g exceeds g_cap.
CoveringGraph build_covering_graph(const SimplicialComplex& k, const AnnotationIndex& idx,
                                   std::size_t g_cap = 14);

/// Per class h: the length of the shortest closed walk with annotation h and
/// a witness walk as a base vertex sequence. Class 0 is the empty walk of
/// length 0. The n_0 single-source sweeps run on `threads` threads.
struct ClassWalkTable {
  std::size_t g = 0;
  std::vector<double> length;                  // indexed by h
  std::vector<std::vector<VertexId>> walk;     // closed walk, first == last (empty for h = 0)
};

ClassWalkTable shortest_closed_walks(const SimplicialComplex& k, const AnnotationIndex& idx,
                                     const CoveringGraph& cover, int threads = 1);

/// Dynamic program over class splits: C(h, 1) is the walk-table length and
/// C(h, k) = min over h = h1 + h2 of C(h1, k-1) + C(h2, 1). C(h, g) is the
/// weight of the shortest cycle in class h.
struct ClassDPTable {
  std::size_t g = 0;
  std::size_t sheets = 1;
  std::vector<double> value;        // value[(k-1) * sheets + h]
  std::vector<std::uint32_t> split; // chosen h2, for k >= 2

  double at(std::uint32_t h, std::size_t k) const { return value[(k - 1) * sheets + h]; }
};

ClassDPTable class_dp(const ClassWalkTable& walks, std::size_t g);

struct OptimalCycle {
  Chain cycle;
  double weight = 0.0;  // recomputed from the cycle after overlap cancellation
  std::vector<std::vector<VertexId>> component_walks;  // the <= g closed walks used
};

struct OptHomOptions {
  std::size_t g_cap = 14;
  int threads = 1;
};

/// Shortest cycle homologous to z. Throws Error when z is not a cycle.
OptimalCycle shortest_homologous_cycle(const SimplicialComplex& k, const AnnotationIndex& idx,
                                       const Chain& z, const OptHomOptions& options = {});

/// Shortest cycle in every homology class, indexed by class mask h.
std::vector<OptimalCycle> all_class_optima(const SimplicialComplex& k,
                                           const AnnotationIndex& idx,
                                           const OptHomOptions& options = {});

}  // namespace homcoord
