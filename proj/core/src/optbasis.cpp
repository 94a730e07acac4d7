#include "homcoord/optbasis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "homcoord/errors.hpp"
#include "homcoord/queries.hpp"
#include "homcoord/z2matrix.hpp"
#include "parallel.hpp"

namespace homcoord {

ShortestPathTree shortest_path_tree(const SimplicialComplex& k, VertexId source) {
  const std::size_t n0 = k.size(0);
  if (source >= n0) throw Error("shortest_path_tree: source vertex out of range");
  constexpr double kInf = std::numeric_limits<double>::infinity();

  ShortestPathTree t;
  t.source = source;
  t.dist.assign(n0, kInf);
  t.parent.assign(n0, source);
  t.parent_edge.assign(n0, 0);
  t.order.reserve(n0);

  std::vector<char> settled(n0, 0);
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  t.dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    t.order.push_back(v);
    if (v != source) {
      // Smallest-id settled optimal predecessor; at least the vertex that
      // assigned dist[v] qualifies.
      for (const auto& nb : k.neighbors(v)) {
        if (settled[nb.vertex] && t.dist[nb.vertex] + k.weight(1, nb.edge) == d) {
          t.parent[v] = nb.vertex;
          t.parent_edge[v] = nb.edge;
          t.tree_edges.push_back(nb.edge);
          break;
        }
      }
    }
    for (const auto& nb : k.neighbors(v)) {
      const double nd = d + k.weight(1, nb.edge);
      if (nd < t.dist[nb.vertex]) {
        t.dist[nb.vertex] = nd;
        pq.push({nd, nb.vertex});
      }
    }
  }
  if (t.order.size() != n0) throw Error("shortest_path_tree: 1-skeleton is disconnected");
  std::sort(t.tree_edges.begin(), t.tree_edges.end());
  return t;
}

std::vector<Bitset> annotate_tree_vertices(const ShortestPathTree& tree,
                                           const AnnotationIndex& idx) {
  std::vector<Bitset> labels(tree.dist.size(), Bitset(idx.g));
  for (VertexId v : tree.order) {
    if (v == tree.source) continue;
    labels[v] = labels[tree.parent[v]] ^ idx.annotation(tree.parent_edge[v]);
  }
  return labels;
}

namespace {

Chain tree_cycle(const SimplicialComplex& k, const ShortestPathTree& t, SimplexId e) {
  Chain z{1, Bitset(k.size(1))};
  auto climb = [&](VertexId v) {
    while (v != t.source) {
      z.members.flip(t.parent_edge[v]);
      v = t.parent[v];
    }
  };
  const auto [x, y] = k.edge(e);
  climb(x);
  climb(y);
  z.members.flip(e);
  return z;
}

std::vector<CandidateCycle> candidates_for_source(const SimplicialComplex& k,
                                                  const AnnotationIndex& idx, VertexId s) {
  const ShortestPathTree t = shortest_path_tree(k, s);
  const std::vector<Bitset> labels = annotate_tree_vertices(t, idx);
  std::vector<char> in_tree(k.size(1), 0);
  for (SimplexId e : t.tree_edges) in_tree[e] = 1;
  std::vector<CandidateCycle> out;
  out.reserve(k.size(1) - t.tree_edges.size());
  for (SimplexId e = 0; e < k.size(1); ++e) {
    if (in_tree[e]) continue;
    const auto [x, y] = k.edge(e);
    CandidateCycle c;
    c.source = s;
    c.edge = e;
    c.weight = t.dist[x] + t.dist[y] + k.weight(1, e);
    c.annotation = labels[x] ^ labels[y] ^ idx.annotation(e);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<CandidateCycle> candidate_cycles(const SimplicialComplex& k,
                                             const AnnotationIndex& idx, int threads) {
  const std::size_t n0 = k.size(0);
  std::vector<std::vector<CandidateCycle>> per_source(n0);
  detail::parallel_for(n0, threads, [&](std::size_t s) {
    per_source[s] = candidates_for_source(k, idx, static_cast<VertexId>(s));
  });
  std::vector<CandidateCycle> all;
  for (auto& chunk : per_source)
    for (auto& c : chunk) all.push_back(std::move(c));
  return all;
}

HomologyBasisResult shortest_homology_basis(const SimplicialComplex& k,
                                            const AnnotationIndex& idx, int threads) {
  HomologyBasisResult result;
  if (idx.g == 0) return result;

  std::vector<CandidateCycle> pool = candidate_cycles(k, idx, threads);
  std::stable_sort(pool.begin(), pool.end(), [](const CandidateCycle& a, const CandidateCycle& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.source != b.source) return a.source < b.source;
    return a.edge < b.edge;
  });

  std::vector<Bitset> columns;
  columns.reserve(pool.size());
  for (const auto& c : pool) columns.push_back(c.annotation);
  const std::vector<std::size_t> picked =
      block_earliest_basis(from_columns(idx.g, columns), idx.g);

  std::map<VertexId, ShortestPathTree> trees;  // winners often share sources
  for (std::size_t i : picked) {
    const CandidateCycle& c = pool[i];
    auto it = trees.find(c.source);
    if (it == trees.end()) it = trees.emplace(c.source, shortest_path_tree(k, c.source)).first;
    BasisCycle bc;
    bc.candidate = c;
    bc.cycle = tree_cycle(k, it->second, c.edge);
    result.total_weight += c.weight;
    result.cycles.push_back(std::move(bc));
  }
  return result;
}

HomologyBasisResult shortest_homology_basis(const SimplicialComplex& k, int threads) {
  const AnnotationIndex idx = build_annotation_index(k, 1);
  return shortest_homology_basis(k, idx, threads);
}

}  // namespace homcoord
