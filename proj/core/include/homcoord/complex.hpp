#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homcoord/bitset.hpp"
#include "homcoord/z2matrix.hpp"

namespace homcoord {

using VertexId = std::uint32_t;
using SimplexId = std::uint32_t;

/// A p-chain: a subset of the p-simplices of one complex.
struct Chain {
  int dim = 0;
  Bitset members;

  bool operator==(const Chain&) const = default;
};

struct ParseOptions {
  /// Instead of rejecting a disconnected 1-skeleton, keep only the component
  /// with the most vertices (smallest minimum vertex id on ties).
  bool largest_component = false;
};

/// A finite weighted simplicial complex with a connected 1-skeleton.
///
/// Simplices of each dimension are indexed 0..size(p)-1 in insertion order;
/// faces implied by closure are appended after the explicit simplices in
/// lexicographic vertex order, which fixes all downstream earliest-basis
/// results. Immutable after construction and safe to share across threads.
class SimplicialComplex {
 public:
  struct Neighbor {
    VertexId vertex;
    SimplexId edge;
    auto operator<=>(const Neighbor&) const = default;
  };

  int dim() const { return static_cast<int>(simplices_.size()) - 1; }
  /// Number of p-simplices; 0 when p is out of range.
  std::size_t size(int p) const {
    return (p >= 0 && p <= dim()) ? simplices_[static_cast<std::size_t>(p)].size() : 0;
  }
  std::size_t total_size() const;

  std::span<const VertexId> simplex(int p, SimplexId id) const;
  double weight(int p, SimplexId id) const;
  std::optional<SimplexId> find(int p, std::span<const VertexId> vertices) const;

  /// Endpoints of edge e, in increasing order.
  std::pair<VertexId, VertexId> edge(SimplexId e) const;
  /// Neighbors of v in the 1-skeleton, sorted by vertex id.
  std::span<const Neighbor> neighbors(VertexId v) const;
  std::optional<SimplexId> edge_between(VertexId u, VertexId v) const;

 private:
  friend class ComplexBuilder;
  // simplices_[p][id] = vertex ids (p+1 of them, strictly increasing)
  std::vector<std::vector<std::vector<VertexId>>> simplices_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<std::size_t>> lookup_order_;  // per dim: ids sorted by vertex tuple
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Accumulates simplices, then validates, closure-completes and freezes them.
class ComplexBuilder {
 public:
  /// `line` tags the source line for error messages (0 = not from a file).
  ComplexBuilder& add(std::vector<VertexId> vertices, double weight = 1.0, int line = 0);
  SimplicialComplex build(const ParseOptions& options = {}) &&;

 private:
  struct Pending {
    std::vector<VertexId> vertices;
    double weight;
    int line;
  };
  std::vector<Pending> pending_;
};

/// Complex file format: one simplex per line as space-separated increasing
/// vertex ids, optional trailing `w=<float>`; `#` starts a comment; blank
/// lines are ignored. Implied faces are added with weight 1.
SimplicialComplex parse_complex(std::string_view text, const ParseOptions& options = {});

/// Emits every simplex explicitly (per dimension, in id order) so that
/// re-parsing yields an identical complex.
std::string serialize_complex(const SimplicialComplex& k);

/// Cycle file format: one p-simplex per line as vertex ids; the dimension is
/// inferred from the lines and must be uniform. An empty file yields the empty
/// chain of `fallback_dim`.
Chain parse_chain(std::string_view text, const SimplicialComplex& k, int fallback_dim = 1);

/// Boundary matrix of dimension p: size(p-1) x size(p); column j has ones at
/// the (p-1)-faces of p-simplex j. Requires 1 <= p <= dim().
Z2Matrix boundary_matrix(const SimplicialComplex& k, int p);

/// True iff the boundary of z vanishes (0-chains are always cycles).
bool is_cycle(const SimplicialComplex& k, const Chain& z);

/// Rank of the p-th Z2 homology group.
int betti(const SimplicialComplex& k, int p);

double chain_weight(const SimplicialComplex& k, const Chain& z);

/// Formats a double with shortest round-trip precision.
std::string format_weight(double w);

}  // namespace homcoord
