#include "homcoord/opthom.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <string>

#include "homcoord/errors.hpp"
#include "parallel.hpp"

namespace homcoord {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint32_t mask_of(const Bitset& bits) {
  std::uint32_t m = 0;
  bits.for_each_set([&](std::size_t i) { m |= std::uint32_t{1} << i; });
  return m;
}

struct LiftedSweep {
  std::vector<double> dist;
  std::vector<std::uint64_t> parent;      // only filled when parents requested
  std::vector<SimplexId> parent_edge;
};

// Dijkstra over the covering graph from one lifted source. Vertices settle in
// (distance, lifted id) order; parents, when requested, are the smallest-id
// settled optimal predecessors, so witness walks are deterministic.
LiftedSweep lifted_dijkstra(const SimplicialComplex& k, const CoveringGraph& cover,
                            std::uint64_t source, bool want_parents) {
  const std::size_t g = cover.g;
  const std::size_t n = cover.lifted_vertices;
  LiftedSweep s;
  s.dist.assign(n, kInf);
  if (want_parents) {
    s.parent.assign(n, source);
    s.parent_edge.assign(n, 0);
  }
  std::vector<char> settled(n, 0);
  using Entry = std::pair<double, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  s.dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    const auto v = static_cast<VertexId>(u >> g);
    const std::uint64_t h = u & ((std::uint64_t{1} << g) - 1);
    if (want_parents && u != source) {
      for (const auto& nb : k.neighbors(v)) {
        const std::uint64_t pu =
            (std::uint64_t{nb.vertex} << g) | (h ^ cover.edge_class[nb.edge]);
        if (settled[pu] && s.dist[pu] + k.weight(1, nb.edge) == d) {
          s.parent[u] = pu;
          s.parent_edge[u] = nb.edge;
          break;
        }
      }
    }
    for (const auto& nb : k.neighbors(v)) {
      const std::uint64_t to = (std::uint64_t{nb.vertex} << g) | (h ^ cover.edge_class[nb.edge]);
      const double nd = d + k.weight(1, nb.edge);
      if (nd < s.dist[to]) {
        s.dist[to] = nd;
        pq.push({nd, to});
      }
    }
  }
  return s;
}

}  // namespace

CoveringGraph build_covering_graph(const SimplicialComplex& k, const AnnotationIndex& idx,
                                   std::size_t g_cap) {
  if (idx.dim != 1) throw Error("build_covering_graph: annotation index must be 1-dimensional");
  g_cap = std::min<std::size_t>(g_cap, 30);  // class masks are 32-bit
  if (idx.g > g_cap) {
    const double mib = static_cast<double>(k.size(0)) * static_cast<double>(std::uint64_t{1} << idx.g) *
                       8.0 / (1024.0 * 1024.0);
    throw CapabilityError(
        "covering graph width g=" + std::to_string(idx.g) + " exceeds the cap of " +
        std::to_string(g_cap) + "; one shortest-path sweep would need about " +
        std::to_string(static_cast<std::uint64_t>(mib) + 1) + " MiB (n_0 * 2^g vertices)");
  }
  CoveringGraph cover;
  cover.g = idx.g;
  cover.sheets = std::size_t{1} << idx.g;
  cover.lifted_vertices = k.size(0) * cover.sheets;
  cover.edge_class.resize(k.size(1));
  for (SimplexId e = 0; e < k.size(1); ++e) cover.edge_class[e] = mask_of(idx.annotation(e));
  return cover;
}

ClassWalkTable shortest_closed_walks(const SimplicialComplex& k, const AnnotationIndex& idx,
                                     const CoveringGraph& cover, int threads) {
  if (cover.g != idx.g || cover.edge_class.size() != k.size(1))
    throw Error("shortest_closed_walks: covering graph does not match the annotation index");
  const std::size_t n0 = k.size(0);
  const std::size_t sheets = cover.sheets;
  ClassWalkTable table;
  table.g = cover.g;
  table.length.assign(sheets, kInf);
  table.walk.assign(sheets, {});
  table.length[0] = 0.0;  // the empty walk

  // Best (length, base vertex) per class; min-merging is order independent,
  // so the result does not depend on the thread count.
  std::vector<std::pair<double, VertexId>> best(
      sheets, {kInf, std::numeric_limits<VertexId>::max()});
  std::mutex merge_mutex;
  detail::parallel_for(n0, threads, [&](std::size_t vi) {
    const auto v = static_cast<VertexId>(vi);
    const LiftedSweep sweep = lifted_dijkstra(k, cover, std::uint64_t{v} << cover.g, false);
    std::lock_guard lock(merge_mutex);
    for (std::size_t h = 1; h < sheets; ++h) {
      const double d = sweep.dist[(std::uint64_t{v} << cover.g) | h];
      if (std::pair<double, VertexId>{d, v} < best[h]) best[h] = {d, v};
    }
  });

  // Witness walks: one parent-tracking rerun per distinct winning vertex.
  std::map<VertexId, std::vector<std::uint32_t>> by_vertex;
  for (std::size_t h = 1; h < sheets; ++h)
    if (best[h].first < kInf) by_vertex[best[h].second].push_back(static_cast<std::uint32_t>(h));
  for (const auto& [v, classes] : by_vertex) {
    const std::uint64_t src = std::uint64_t{v} << cover.g;
    const LiftedSweep sweep = lifted_dijkstra(k, cover, src, true);
    for (std::uint32_t h : classes) {
      table.length[h] = best[h].first;
      std::vector<VertexId> walk;
      std::uint64_t cur = src | h;
      while (cur != src) {
        walk.push_back(static_cast<VertexId>(cur >> cover.g));
        cur = sweep.parent[cur];
      }
      walk.push_back(v);
      std::reverse(walk.begin(), walk.end());  // runs (v,0) -> (v,h)
      table.walk[h] = std::move(walk);
    }
  }
  return table;
}

ClassDPTable class_dp(const ClassWalkTable& walks, std::size_t g) {
  ClassDPTable dp;
  dp.g = g;
  dp.sheets = std::size_t{1} << g;
  if (g == 0) {
    dp.value.assign(1, 0.0);
    return dp;
  }
  dp.value.assign(g * dp.sheets, kInf);
  dp.split.assign(g * dp.sheets, 0);
  for (std::size_t h = 0; h < dp.sheets; ++h) dp.value[h] = walks.length[h];
  for (std::size_t kk = 2; kk <= g; ++kk) {
    const std::size_t row = (kk - 1) * dp.sheets;
    const std::size_t prev = (kk - 2) * dp.sheets;
    for (std::size_t h = 0; h < dp.sheets; ++h) {
      double bestv = dp.value[prev + h];  // h2 = 0 carries C(h, k-1) forward
      std::uint32_t bests = 0;
      for (std::size_t h2 = 1; h2 < dp.sheets; ++h2) {
        const double v = dp.value[prev + (h ^ h2)] + walks.length[h2];
        if (v < bestv) {
          bestv = v;
          bests = static_cast<std::uint32_t>(h2);
        }
      }
      dp.value[row + h] = bestv;
      dp.split[row + h] = bests;
    }
  }
  return dp;
}

namespace {

OptimalCycle reconstruct(const SimplicialComplex& k, const ClassWalkTable& walks,
                         const ClassDPTable& dp, std::uint32_t h) {
  OptimalCycle out;
  out.cycle = Chain{1, Bitset(k.size(1))};
  std::uint32_t cur = h;
  for (std::size_t kk = dp.g; kk >= 2; --kk) {
    const std::uint32_t h2 = dp.split[(kk - 1) * dp.sheets + cur];
    if (h2 != 0) {
      out.component_walks.push_back(walks.walk[h2]);
      cur ^= h2;
    }
  }
  if (cur != 0) out.component_walks.push_back(walks.walk[cur]);
  for (const auto& walk : out.component_walks)
    for (std::size_t i = 1; i < walk.size(); ++i) {
      const auto e = k.edge_between(walk[i - 1], walk[i]);
      if (!e) throw Error("reconstruct: walk step is not an edge of the complex");
      out.cycle.members.flip(*e);
    }
  out.weight = chain_weight(k, out.cycle);
  return out;
}

}  // namespace

OptimalCycle shortest_homologous_cycle(const SimplicialComplex& k, const AnnotationIndex& idx,
                                       const Chain& z, const OptHomOptions& options) {
  const std::uint32_t h = mask_of(annotate_cycle(k, idx, z));
  const CoveringGraph cover = build_covering_graph(k, idx, options.g_cap);
  const ClassWalkTable walks = shortest_closed_walks(k, idx, cover, options.threads);
  const ClassDPTable dp = class_dp(walks, cover.g);
  return reconstruct(k, walks, dp, h);
}

std::vector<OptimalCycle> all_class_optima(const SimplicialComplex& k, const AnnotationIndex& idx,
                                           const OptHomOptions& options) {
  const CoveringGraph cover = build_covering_graph(k, idx, options.g_cap);
  const ClassWalkTable walks = shortest_closed_walks(k, idx, cover, options.threads);
  const ClassDPTable dp = class_dp(walks, cover.g);
  std::vector<OptimalCycle> out;
  out.reserve(cover.sheets);
  for (std::size_t h = 0; h < cover.sheets; ++h)
    out.push_back(reconstruct(k, walks, dp, static_cast<std::uint32_t>(h)));
  return out;
}

}  // namespace homcoord
