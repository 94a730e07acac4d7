#include "homcoord/annotate.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "homcoord/errors.hpp"
#include "homcoord/z2matrix.hpp"

namespace homcoord {

SpanningTree build_spanning_tree(const SimplicialComplex& k) {
  const std::size_t n0 = k.size(0);
  SpanningTree t;
  t.root = 0;
  t.parent.assign(n0, 0);
  t.parent_edge.assign(n0, 0);
  t.order.reserve(n0);
  std::vector<char> seen(n0, 0);
  std::deque<VertexId> queue;
  queue.push_back(t.root);
  seen[t.root] = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    t.order.push_back(u);
    for (const auto& nb : k.neighbors(u)) {
      if (seen[nb.vertex]) continue;
      seen[nb.vertex] = 1;
      t.parent[nb.vertex] = u;
      t.parent_edge[nb.vertex] = nb.edge;
      t.edges.push_back(nb.edge);
      queue.push_back(nb.vertex);
    }
  }
  if (t.order.size() != n0) throw Error("build_spanning_tree: 1-skeleton is disconnected");
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

std::optional<std::size_t> SentinelStructure::position(SimplexId sentinel) const {
  auto it = std::lower_bound(sentinels.begin(), sentinels.end(), sentinel);
  if (it == sentinels.end() || *it != sentinel) return std::nullopt;
  return static_cast<std::size_t>(it - sentinels.begin());
}

const Chain& SentinelStructure::cycle_of(SimplexId sentinel) const {
  const auto pos = position(sentinel);
  if (!pos) throw Error("cycle_of: simplex " + std::to_string(sentinel) + " is not a sentinel");
  return cycles[*pos];
}

namespace {

// XOR of the tree-path edges from v up to the root.
void xor_root_path(const SpanningTree& tree, VertexId v, Bitset& acc) {
  while (v != tree.root) {
    acc.flip(tree.parent_edge[v]);
    v = tree.parent[v];
  }
}

}  // namespace

SentinelStructure sentinel_cycles_1(const SimplicialComplex& k, const SpanningTree& tree) {
  const std::size_t n1 = k.size(1);
  SentinelStructure s;
  s.dim = 1;
  s.non_sentinels = tree.edges;
  std::vector<char> in_tree(n1, 0);
  for (SimplexId e : tree.edges) in_tree[e] = 1;
  for (SimplexId e = 0; e < n1; ++e)
    if (!in_tree[e]) s.sentinels.push_back(e);
  s.cycles.reserve(s.sentinels.size());
  for (SimplexId e : s.sentinels) {
    const auto [u, v] = k.edge(e);
    Chain z{1, Bitset(n1)};
    xor_root_path(tree, u, z.members);  // shared prefix toward the root cancels
    xor_root_path(tree, v, z.members);
    z.members.flip(e);
    s.cycles.push_back(std::move(z));
  }
  return s;
}

SentinelStructure sentinel_cycles_p(const SimplicialComplex& k, int p) {
  if (p < 1) throw Error("sentinel_cycles_p: dimension must be at least 1");
  const std::size_t np = k.size(p);
  const CoordinateDecomposition d = coordinate_decomposition(
      p <= k.dim() ? boundary_matrix(k, p) : Z2Matrix::zero(k.size(p - 1), 0));

  SentinelStructure s;
  s.dim = p;
  s.non_sentinels.assign(d.basis_indices.begin(), d.basis_indices.end());
  std::vector<char> is_basis(np, 0);
  for (std::size_t c : d.basis_indices) is_basis[c] = 1;
  for (SimplexId j = 0; j < np; ++j)
    if (!is_basis[j]) s.sentinels.push_back(j);

  // Column i of the remainder expresses the boundary of sentinel i in the
  // boundary basis; flipping those basis simplices plus the sentinel itself
  // yields a p-cycle.
  s.cycles.reserve(s.sentinels.size());
  for (std::size_t i = 0; i < s.sentinels.size(); ++i) {
    Chain z{p, Bitset(np)};
    z.members.set(s.sentinels[i]);
    for (std::size_t j = 0; j < d.rank; ++j)
      if (d.remainder.at(j, i)) z.members.set(d.basis_indices[j]);
    s.cycles.push_back(std::move(z));
  }
  return s;
}

namespace {

struct BasisSelection {
  std::vector<std::size_t> positions;  // indices into s.sentinels
  Z2Matrix stacked;                    // [boundary | sentinel cycles]
  std::vector<std::size_t> pivots;     // earliest basis of the stacked matrix
  std::size_t boundary_cols = 0;
};

Z2Matrix boundary_above(const SimplicialComplex& k, int p) {
  if (p + 1 <= k.dim()) return boundary_matrix(k, p + 1);
  return Z2Matrix::zero(k.size(p), 0);
}

BasisSelection select_homology_basis(const SimplicialComplex& k, int p,
                                     const SentinelStructure& s) {
  std::vector<Bitset> zcols;
  zcols.reserve(s.cycles.size());
  for (const Chain& z : s.cycles) zcols.push_back(z.members);
  BasisSelection sel;
  const Z2Matrix bd = boundary_above(k, p);
  sel.boundary_cols = bd.cols();
  sel.stacked = hconcat(bd, from_columns(k.size(p), zcols));
  sel.pivots = earliest_basis(sel.stacked);
  for (std::size_t c : sel.pivots)
    if (c >= sel.boundary_cols) sel.positions.push_back(c - sel.boundary_cols);
  return sel;
}

}  // namespace

std::vector<Chain> homology_basis(const SimplicialComplex& k, int p, const SentinelStructure& s) {
  const BasisSelection sel = select_homology_basis(k, p, s);
  std::vector<Chain> basis;
  basis.reserve(sel.positions.size());
  for (std::size_t pos : sel.positions) basis.push_back(s.cycles[pos]);
  return basis;
}

AnnotationIndex build_annotation_index(const SimplicialComplex& k, int p,
                                       const AnnotateOptions& options) {
  if (p < 1) throw Error("build_annotation_index: dimension must be at least 1");

  AnnotationIndex idx;
  idx.dim = p;
  if (p == 1 && !options.force_generic)
    idx.sentinels = sentinel_cycles_1(k, build_spanning_tree(k));
  else
    idx.sentinels = sentinel_cycles_p(k, p);

  const SentinelStructure& s = idx.sentinels;
  const BasisSelection sel = select_homology_basis(k, p, s);
  idx.g = sel.positions.size();
  for (std::size_t pos : sel.positions) idx.basis.push_back(s.cycles[pos]);

  // One stacked solve [Z~ | Z] yields the coordinates of every sentinel cycle
  // in the selected basis; the last g rows are the annotations.
  const Z2Matrix ztilde = select_columns(sel.stacked, sel.pivots);
  std::vector<Bitset> zcols;
  zcols.reserve(s.cycles.size());
  for (const Chain& z : s.cycles) zcols.push_back(z.members);
  const Z2Matrix x = express_in_basis(ztilde, from_columns(k.size(p), zcols));
  const std::size_t r = sel.pivots.size() - idx.g;

  idx.annotations.assign(k.size(p), Bitset(idx.g));
  for (std::size_t i = 0; i < s.sentinels.size(); ++i) {
    Bitset a(idx.g);
    for (std::size_t b = 0; b < idx.g; ++b)
      if (x.at(r + b, i)) a.set(b);
    idx.annotations[s.sentinels[i]] = std::move(a);
  }
  return idx;
}

Bitset annotate_cycle(const SimplicialComplex& k, const AnnotationIndex& idx, const Chain& z) {
  if (z.dim != idx.dim) throw Error("annotate_cycle: chain dimension mismatch");
  if (!is_cycle(k, z)) throw Error("annotate_cycle: chain is not a cycle");
  Bitset a(idx.g);
  z.members.for_each_set([&](std::size_t id) { a ^= idx.annotations[id]; });
  return a;
}

}  // namespace homcoord
