#include <doctest.h>

#include <map>
#include <queue>

#include "homcoord/opthom.hpp"
#include "homcoord/errors.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace homcoord;
namespace fx = homcoord::testing;

namespace {

std::uint32_t mask_of(const Bitset& b) {
  std::uint32_t m = 0;
  b.for_each_set([&](std::size_t i) { m |= std::uint32_t{1} << i; });
  return m;
}

// Test-local Dijkstra over the implicit cover, written against the covering
// graph's edge rule only (independent of the production sweep).
std::vector<double> cover_distances(const SimplicialComplex& k, const CoveringGraph& cover,
                                    VertexId v0, std::uint32_t h0) {
  const std::size_t n = cover.lifted_vertices;
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using E = std::pair<double, std::uint64_t>;
  std::priority_queue<E, std::vector<E>, std::greater<>> pq;
  const std::uint64_t src = (std::uint64_t{v0} << cover.g) | h0;
  dist[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    const auto v = static_cast<VertexId>(u >> cover.g);
    const std::uint32_t h = u & ((1u << cover.g) - 1);
    for (const auto& nb : k.neighbors(v)) {
      const std::uint64_t to = (std::uint64_t{nb.vertex} << cover.g) | (h ^ cover.edge_class[nb.edge]);
      if (d + k.weight(1, nb.edge) < dist[to]) {
        dist[to] = d + k.weight(1, nb.edge);
        pq.push({dist[to], to});
      }
    }
  }
  return dist;
}

// Weight of the minimum cycle in the class of `h`, read off the brute map.
double oracle_min_for_class(const SimplicialComplex& k, const AnnotationIndex& idx,
                            std::uint32_t h) {
  const auto per_class = oracle::brute_shortest_per_class(k);
  for (const Chain& z : oracle::enumerate_cycles(k, 1))
    if (mask_of(annotate_cycle(k, idx, z)) == h)
      return per_class.at(oracle::brute_class(k, 1, z).to_string());
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("covering graph shapes") {
  SUBCASE("g = 0 is the base graph") {
    const SimplicialComplex k = parse_complex("0 1 2\n");
    const AnnotationIndex idx = build_annotation_index(k, 1);
    const CoveringGraph cover = build_covering_graph(k, idx);
    CHECK(cover.sheets == 1);
    CHECK(cover.lifted_vertices == k.size(0));
  }
  SUBCASE("one nontrivial class doubles the vertices") {
    const SimplicialComplex k = fx::annulus_prism();
    const CoveringGraph cover = build_covering_graph(k, build_annotation_index(k, 1));
    CHECK(cover.sheets == 2);
    CHECK(cover.lifted_vertices == 2 * k.size(0));
  }
  SUBCASE("the two-holes fixture lifts to four sheets") {
    const fx::TwoHoles f = fx::two_holes();
    const CoveringGraph cover = build_covering_graph(f.k, build_annotation_index(f.k, 1));
    CHECK(cover.sheets == 4);
    CHECK(cover.lifted_vertices == 4 * f.k.size(0));
  }
  SUBCASE("exceeding the cap reports the memory cost") {
    const fx::TwoHoles f = fx::two_holes();
    const AnnotationIndex idx = build_annotation_index(f.k, 1);
    CHECK_THROWS_WITH_AS(build_covering_graph(f.k, idx, 1), doctest::Contains("MiB"),
                         CapabilityError);
  }
}

TEST_CASE("deck transformations preserve distances") {
  const fx::TwoHoles f = fx::two_holes();
  const AnnotationIndex idx = build_annotation_index(f.k, 1);
  const CoveringGraph cover = build_covering_graph(f.k, idx);
  for (std::uint32_t a : {0u, 1u, 2u, 3u}) {
    const auto base = cover_distances(f.k, cover, 3, 0);
    const auto shifted = cover_distances(f.k, cover, 3, a);
    for (VertexId u = 0; u < f.k.size(0); ++u)
      for (std::uint32_t b = 0; b < 4; ++b)
        CHECK(base[(std::uint64_t{u} << 2) | b] == shifted[(std::uint64_t{u} << 2) | (b ^ a)]);
  }
}

TEST_CASE("shortest closed walks per class") {
  SUBCASE("class zero is the empty walk") {
    const SimplicialComplex k = fx::annulus_prism();
    const AnnotationIndex idx = build_annotation_index(k, 1);
    const auto walks = shortest_closed_walks(k, idx, build_covering_graph(k, idx));
    CHECK(walks.length[0] == 0.0);
    CHECK(walks.walk[0].empty());
  }
  SUBCASE("annulus: the nontrivial walk is the hole girth") {
    const SimplicialComplex k = fx::annulus_prism();
    const AnnotationIndex idx = build_annotation_index(k, 1);
    const auto walks = shortest_closed_walks(k, idx, build_covering_graph(k, idx));
    CHECK(walks.length[1] == 3.0);
    REQUIRE(walks.walk[1].size() == 4);  // closed triangle, first == last
    CHECK(walks.walk[1].front() == walks.walk[1].back());
  }
  SUBCASE("two-holes: the both-holes class is one seven-edge walk") {
    const fx::TwoHoles f = fx::two_holes();
    const AnnotationIndex idx = build_annotation_index(f.k, 1);
    const auto walks = shortest_closed_walks(f.k, idx, build_covering_graph(f.k, idx));
    CHECK(walks.length[3] == 7.0);
  }
  SUBCASE("witness walks annotate to their class and match their length") {
    const SimplicialComplex k = fx::torus7();
    const AnnotationIndex idx = build_annotation_index(k, 1);
    const auto walks = shortest_closed_walks(k, idx, build_covering_graph(k, idx));
    for (std::uint32_t h = 1; h < walks.length.size(); ++h) {
      const auto& w = walks.walk[h];
      REQUIRE(w.size() >= 2);
      double len = 0;
      Bitset ann(idx.g);
      for (std::size_t i = 1; i < w.size(); ++i) {
        const auto e = k.edge_between(w[i - 1], w[i]);
        REQUIRE(e);
        len += k.weight(1, *e);
        ann ^= idx.annotation(*e);
      }
      CHECK(len == walks.length[h]);
      CHECK(mask_of(ann) == h);
    }
  }
}

TEST_CASE("class dynamic program") {
  SUBCASE("g = 1 copies the walk table") {
    const SimplicialComplex k = fx::annulus_prism();
    const AnnotationIndex idx = build_annotation_index(k, 1);
    const auto walks = shortest_closed_walks(k, idx, build_covering_graph(k, idx));
    const auto dp = class_dp(walks, 1);
    CHECK(dp.at(0, 1) == 0.0);
    CHECK(dp.at(1, 1) == walks.length[1]);
  }
  SUBCASE("class zero stays zero and values never increase with k") {
    const fx::TwoHoles f = fx::two_holes();
    const AnnotationIndex idx = build_annotation_index(f.k, 1);
    const auto walks = shortest_closed_walks(f.k, idx, build_covering_graph(f.k, idx));
    const auto dp = class_dp(walks, idx.g);
    for (std::size_t kk = 1; kk <= idx.g; ++kk) CHECK(dp.at(0, kk) == 0.0);
    for (std::uint32_t h = 0; h < dp.sheets; ++h)
      for (std::size_t kk = 2; kk <= idx.g; ++kk) CHECK(dp.at(h, kk) <= dp.at(h, kk - 1));
  }
  SUBCASE("C(h, g) equals the exhaustive class minimum") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const SimplicialComplex k = fx::random_2complex_with_small_g(seed + 40, 4);
      if (k.dim() < 1) continue;
      const AnnotationIndex idx = build_annotation_index(k, 1);
      if (idx.g == 0) continue;
      const auto walks = shortest_closed_walks(k, idx, build_covering_graph(k, idx));
      const auto dp = class_dp(walks, idx.g);
      for (std::uint32_t h = 0; h < dp.sheets; ++h)
        CHECK(dp.at(h, idx.g) == oracle_min_for_class(k, idx, h));
    }
  }
}

TEST_CASE("shortest homologous cycle") {
  const fx::TwoHoles f = fx::two_holes();
  const AnnotationIndex idx = build_annotation_index(f.k, 1);
  SUBCASE("null-homologous input yields the empty cycle") {
    const auto r = shortest_homologous_cycle(f.k, idx, f.e2e3e4);
    CHECK(r.cycle.members.none());
    CHECK(r.weight == 0.0);
    CHECK(r.component_walks.empty());
  }
  SUBCASE("the outer boundary's class optimum") {
    const auto r = shortest_homologous_cycle(f.k, idx, f.outer);
    CHECK(r.weight == 7.0);
    CHECK(is_cycle(f.k, r.cycle));
    CHECK(annotate_cycle(f.k, idx, r.cycle) == annotate_cycle(f.k, idx, f.outer));
  }
  SUBCASE("an already-optimal cycle keeps its weight") {
    const SimplicialComplex k = fx::annulus_prism();
    const AnnotationIndex aidx = build_annotation_index(k, 1);
    Chain inner{1, Bitset(k.size(1))};
    for (auto [u, v] : {std::pair<VertexId, VertexId>{0, 1}, {1, 2}, {0, 2}})
      inner.members.set(*k.find(1, std::array<VertexId, 2>{u, v}));
    REQUIRE(is_cycle(k, inner));
    REQUIRE(chain_weight(k, inner) == 3.0);
    const auto r = shortest_homologous_cycle(k, aidx, inner);
    CHECK(r.weight == 3.0);
    CHECK(annotate_cycle(k, aidx, r.cycle) == annotate_cycle(k, aidx, inner));
  }
  SUBCASE("non-cycle input is rejected") {
    Chain bad{1, Bitset(f.k.size(1))};
    bad.members.set(0);
    CHECK_THROWS_AS(shortest_homologous_cycle(f.k, idx, bad), Error);
  }
}

TEST_CASE("all-class optima") {
  SUBCASE("g = 0 yields the single empty optimum") {
    const SimplicialComplex k = parse_complex("0 1 2\n");
    const AnnotationIndex idx = build_annotation_index(k, 1);
    const auto all = all_class_optima(k, idx);
    REQUIRE(all.size() == 1);
    CHECK(all[0].weight == 0.0);
    CHECK(all[0].cycle.members.none());
  }
  SUBCASE("annulus has optima 0 and the hole girth") {
    const SimplicialComplex k = fx::annulus_prism();
    const AnnotationIndex idx = build_annotation_index(k, 1);
    const auto all = all_class_optima(k, idx);
    REQUIRE(all.size() == 2);
    CHECK(all[0].weight == 0.0);
    CHECK(all[1].weight == 3.0);
  }
  SUBCASE("torus optima match the oracle per class") {
    const SimplicialComplex k = fx::torus7();
    const AnnotationIndex idx = build_annotation_index(k, 1);
    const auto all = all_class_optima(k, idx);
    REQUIRE(all.size() == 4);
    for (std::uint32_t h = 0; h < 4; ++h) {
      CHECK(all[h].weight == oracle_min_for_class(k, idx, h));
      CHECK(mask_of(annotate_cycle(k, idx, all[h].cycle)) == h);
      CHECK(all[h].component_walks.size() <= idx.g);
      CHECK(all[h].weight == chain_weight(k, all[h].cycle));
    }
  }
  SUBCASE("random complexes with g <= 3 match the oracle everywhere") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const SimplicialComplex k = fx::random_2complex_with_small_g(seed + 70, 3);
      if (k.dim() < 1) continue;
      const AnnotationIndex idx = build_annotation_index(k, 1);
      const auto all = all_class_optima(k, idx);
      for (std::uint32_t h = 0; h < all.size(); ++h) {
        CHECK(all[h].weight == oracle_min_for_class(k, idx, h));
        CHECK(mask_of(annotate_cycle(k, idx, all[h].cycle)) == h);
        CHECK(all[h].component_walks.size() <= std::max<std::size_t>(idx.g, 1));
      }
    }
  }
  SUBCASE("thread count does not change the optima") {
    const SimplicialComplex k = fx::torus7();
    const AnnotationIndex idx = build_annotation_index(k, 1);
    OptHomOptions opt1, opt4;
    opt4.threads = 4;
    const auto a = all_class_optima(k, idx, opt1);
    const auto b = all_class_optima(k, idx, opt4);
    REQUIRE(a.size() == b.size());
    for (std::size_t h = 0; h < a.size(); ++h) {
      CHECK(a[h].weight == b[h].weight);
      CHECK(a[h].cycle.members == b[h].cycle.members);
    }
  }
}
