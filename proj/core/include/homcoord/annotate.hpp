#pragma once

#include <optional>
#include <vector>

#include "homcoord/bitset.hpp"
#include "homcoord/complex.hpp"

namespace homcoord {

/// Spanning tree of the 1-skeleton, built breadth-first from vertex 0 with
/// children visited in increasing id order; this fixes the sentinel structure
/// deterministically.
struct SpanningTree {
  VertexId root = 0;
  std::vector<VertexId> parent;        // parent[root] == root
  std::vector<SimplexId> parent_edge;  // meaningless at the root
  std::vector<VertexId> order;         // breadth-first discovery order
  std::vector<SimplexId> edges;        // tree edge ids, increasing
};

SpanningTree build_spanning_tree(const SimplicialComplex& k);

/// A cycle basis of Z_p in which every basis cycle contains exactly one
/// sentinel simplex: its own. Non-sentinels are the spanning-tree edges for
/// p = 1, or the earliest-basis columns of the boundary matrix in general.
struct SentinelStructure {
  int dim = 1;
  std::vector<SimplexId> sentinels;      // increasing
  std::vector<SimplexId> non_sentinels;  // increasing
  std::vector<Chain> cycles;             // cycles[i] belongs to sentinels[i]

  std::optional<std::size_t> position(SimplexId sentinel) const;
  const Chain& cycle_of(SimplexId sentinel) const;
};

SentinelStructure sentinel_cycles_1(const SimplicialComplex& k, const SpanningTree& tree);
SentinelStructure sentinel_cycles_p(const SimplicialComplex& k, int p);

/// The g cycles selected by the earliest basis of [boundary | sentinel cycles];
/// their classes form a basis of the p-th homology group.
std::vector<Chain> homology_basis(const SimplicialComplex& k, int p, const SentinelStructure& s);

struct AnnotateOptions {
  /// Use the boundary-decomposition sentinel construction even for p = 1
  /// (cross-validation hook; the spanning-tree path is the default there).
  bool force_generic = false;
};

/// Length-g coordinate vectors per p-simplex: XORed over the simplices of any
/// p-cycle they give the cycle's homology class in the stored basis. Two
/// cycles are homologous iff their annotations agree. Immutable after build.
struct AnnotationIndex {
  int dim = 1;
  std::size_t g = 0;
  std::vector<Bitset> annotations;  // one per p-simplex; zero for non-sentinels
  std::vector<Chain> basis;         // basis[i] annotates to unit vector i
  SentinelStructure sentinels;

  const Bitset& annotation(SimplexId id) const { return annotations[id]; }
};

AnnotationIndex build_annotation_index(const SimplicialComplex& k, int p,
                                       const AnnotateOptions& options = {});

/// XOR of member annotations; O(|z| * g). Throws Error when z is not a cycle.
Bitset annotate_cycle(const SimplicialComplex& k, const AnnotationIndex& idx, const Chain& z);

}  // namespace homcoord
