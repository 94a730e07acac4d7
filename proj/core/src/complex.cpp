#include "homcoord/complex.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "homcoord/errors.hpp"

namespace homcoord {

namespace {

bool tuple_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::size_t SimplicialComplex::total_size() const {
  std::size_t n = 0;
  for (const auto& dim : simplices_) n += dim.size();
  return n;
}

std::span<const VertexId> SimplicialComplex::simplex(int p, SimplexId id) const {
  const auto& flat = simplices_[static_cast<std::size_t>(p)][id];
  return {flat.data(), flat.size()};
}

double SimplicialComplex::weight(int p, SimplexId id) const {
  return weights_[static_cast<std::size_t>(p)][id];
}

std::optional<SimplexId> SimplicialComplex::find(int p, std::span<const VertexId> vertices) const {
  if (p < 0 || p > dim() || vertices.size() != static_cast<std::size_t>(p) + 1)
    return std::nullopt;
  const auto& order = lookup_order_[static_cast<std::size_t>(p)];
  const auto& simp = simplices_[static_cast<std::size_t>(p)];
  auto it = std::lower_bound(order.begin(), order.end(), vertices,
                             [&](std::size_t id, std::span<const VertexId> v) {
                               const auto& s = simp[id];
                               return std::lexicographical_compare(s.begin(), s.end(), v.begin(),
                                                                   v.end());
                             });
  if (it == order.end()) return std::nullopt;
  const auto& s = simp[*it];
  if (!std::equal(s.begin(), s.end(), vertices.begin(), vertices.end())) return std::nullopt;
  return static_cast<SimplexId>(*it);
}

std::pair<VertexId, VertexId> SimplicialComplex::edge(SimplexId e) const {
  const auto& s = simplices_[1][e];
  const auto u = find(0, std::span<const VertexId>(&s[0], 1));
  const auto v = find(0, std::span<const VertexId>(&s[1], 1));
  return {*u, *v};
}

std::span<const SimplicialComplex::Neighbor> SimplicialComplex::neighbors(VertexId v) const {
  return adjacency_[v];
}

std::optional<SimplexId> SimplicialComplex::edge_between(VertexId u, VertexId v) const {
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& n, VertexId x) { return n.vertex < x; });
  if (it != adj.end() && it->vertex == v) return it->edge;
  return std::nullopt;
}

ComplexBuilder& ComplexBuilder::add(std::vector<VertexId> vertices, double weight, int line) {
  pending_.push_back({std::move(vertices), weight, line});
  return *this;
}

SimplicialComplex ComplexBuilder::build(const ParseOptions& options) && {
  if (pending_.empty()) throw ParseError("empty complex");

  // Validate and deduplicate the explicit simplices in insertion order.
  int maxdim = 0;
  for (const auto& p : pending_) {
    if (p.vertices.empty()) throw ParseError("empty simplex", p.line);
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
      if (p.vertices[i] <= p.vertices[i - 1])
        throw ParseError("vertex ids must be strictly increasing", p.line);
    if (!(p.weight >= 0.0)) throw ParseError("negative weight", p.line);
    maxdim = std::max(maxdim, static_cast<int>(p.vertices.size()) - 1);
  }

  std::vector<std::vector<std::vector<VertexId>>> simp(static_cast<std::size_t>(maxdim) + 1);
  std::vector<std::vector<double>> wts(simp.size());
  std::vector<std::map<std::vector<VertexId>, double>> seen(simp.size());
  for (const auto& p : pending_) {
    const auto d = p.vertices.size() - 1;
    auto [it, inserted] = seen[d].try_emplace(p.vertices, p.weight);
    if (!inserted) {
      if (it->second != p.weight)
        throw ParseError("duplicate simplex with conflicting weight", p.line);
      continue;
    }
    simp[d].push_back(p.vertices);
    wts[d].push_back(p.weight);
  }

  // Closure completion, top dimension downward; implied faces get weight 1
  // and are appended after the explicit simplices in lexicographic order.
  for (std::size_t d = simp.size() - 1; d >= 1; --d) {
    std::vector<std::vector<VertexId>> implied;
    for (const auto& s : simp[d]) {
      std::vector<VertexId> face(s.size() - 1);
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != skip) face[k++] = s[i];
        if (seen[d - 1].try_emplace(face, 1.0).second) implied.push_back(face);
      }
    }
    std::sort(implied.begin(), implied.end(), tuple_less);
    for (auto& f : implied) {
      simp[d - 1].push_back(f);
      wts[d - 1].push_back(1.0);
    }
  }

  // Connectivity of the 1-skeleton.
  const std::size_t n0 = simp[0].size();
  std::map<VertexId, std::size_t> vid;  // vertex label -> dense index
  for (std::size_t i = 0; i < n0; ++i) vid[simp[0][i][0]] = i;
  Dsu dsu(n0);
  if (simp.size() > 1)
    for (const auto& e : simp[1]) dsu.unite(vid[e[0]], vid[e[1]]);
  std::map<std::size_t, std::size_t> comp_size;
  for (std::size_t i = 0; i < n0; ++i) ++comp_size[dsu.find(i)];
  if (comp_size.size() > 1) {
    if (!options.largest_component)
      throw ParseError("1-skeleton is disconnected (" + std::to_string(comp_size.size()) +
                       " components); pass --largest-component to keep the largest");
    std::size_t best = dsu.find(0);
    for (std::size_t i = 0; i < n0; ++i) {
      const std::size_t r = dsu.find(i);
      if (comp_size[r] > comp_size[best]) best = r;  // earlier i wins ties
    }
    for (std::size_t d = 0; d < simp.size(); ++d) {
      std::vector<std::vector<VertexId>> ks;
      std::vector<double> kw;
      for (std::size_t i = 0; i < simp[d].size(); ++i)
        if (dsu.find(vid[simp[d][i][0]]) == best) {
          ks.push_back(std::move(simp[d][i]));
          kw.push_back(wts[d][i]);
        }
      simp[d] = std::move(ks);
      wts[d] = std::move(kw);
    }
    while (simp.size() > 1 && simp.back().empty()) {
      simp.pop_back();
      wts.pop_back();
    }
  }

  SimplicialComplex k;
  k.simplices_ = std::move(simp);
  k.weights_ = std::move(wts);
  k.lookup_order_.resize(k.simplices_.size());
  for (std::size_t d = 0; d < k.simplices_.size(); ++d) {
    auto& order = k.lookup_order_[d];
    order.resize(k.simplices_[d].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return tuple_less(k.simplices_[d][a], k.simplices_[d][b]);
    });
  }
  k.adjacency_.resize(k.simplices_[0].size());
  if (k.dim() >= 1) {
    for (SimplexId e = 0; e < k.size(1); ++e) {
      const auto& s = k.simplices_[1][e];
      const auto u = *k.find(0, std::span<const VertexId>(&s[0], 1));
      const auto v = *k.find(0, std::span<const VertexId>(&s[1], 1));
      k.adjacency_[u].push_back({v, e});
      k.adjacency_[v].push_back({u, e});
    }
    for (auto& adj : k.adjacency_) std::sort(adj.begin(), adj.end());
  }
  return k;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId parse_vertex(std::string_view tok, int line) {
  VertexId v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("invalid vertex id '" + std::string(tok) + "'", line);
  return v;
}

// Yields (1-based line number, content with comments stripped), skipping blanks.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) fn(line, raw);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text, const ParseOptions& options) {
  ComplexBuilder builder;
  for_each_line(text, [&](int line, std::string_view content) {
    auto toks = split_ws(content);
    double weight = 1.0;
    if (!toks.empty() && toks.back().starts_with("w=")) {
      const std::string_view wtok = toks.back().substr(2);
      auto [p, ec] = std::from_chars(wtok.data(), wtok.data() + wtok.size(), weight);
      if (ec != std::errc{} || p != wtok.data() + wtok.size())
        throw ParseError("invalid weight '" + std::string(wtok) + "'", line);
      toks.pop_back();
    }
    if (toks.empty()) throw ParseError("simplex has no vertices", line);
    std::vector<VertexId> verts;
    verts.reserve(toks.size());
    for (auto t : toks) verts.push_back(parse_vertex(t, line));
    builder.add(std::move(verts), weight, line);
  });
  return std::move(builder).build(options);
}

std::string serialize_complex(const SimplicialComplex& k) {
  std::string out;
  for (int p = 0; p <= k.dim(); ++p)
    for (SimplexId id = 0; id < k.size(p); ++id) {
      const auto s = k.simplex(p, id);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
      }
      out += " w=";
      out += format_weight(k.weight(p, id));
      out += '\n';
    }
  return out;
}

Chain parse_chain(std::string_view text, const SimplicialComplex& k, int fallback_dim) {
  int dim = -1;
  std::vector<std::pair<int, std::vector<VertexId>>> rows;
  for_each_line(text, [&](int line, std::string_view content) {
    auto toks = split_ws(content);
    std::vector<VertexId> verts;
    verts.reserve(toks.size());
    for (auto t : toks) verts.push_back(parse_vertex(t, line));
    const int p = static_cast<int>(verts.size()) - 1;
    if (dim == -1)
      dim = p;
    else if (p != dim)
      throw ParseError("all simplices in a cycle file must share one dimension", line);
    rows.emplace_back(line, std::move(verts));
  });
  if (dim == -1) dim = fallback_dim;
  Chain z{dim, Bitset(k.size(dim))};
  for (auto& [line, verts] : rows) {
    const auto id = k.find(dim, verts);
    if (!id) throw ParseError("simplex not present in the complex", line);
    if (z.members.test(*id)) throw ParseError("duplicate simplex in cycle file", line);
    z.members.set(*id);
  }
  return z;
}

namespace {

// Like boundary_matrix but yields the empty matrix outside 1..dim, which is
// the convention betti() and the annotation pipeline rely on.
Z2Matrix boundary_or_empty(const SimplicialComplex& k, int p) {
  if (p < 1 || p > k.dim()) return Z2Matrix::zero(k.size(p - 1), k.size(p));
  Z2MatrixBuilder b(k.size(p - 1), k.size(p));
  std::vector<VertexId> face(static_cast<std::size_t>(p));
  for (SimplexId j = 0; j < k.size(p); ++j) {
    const auto s = k.simplex(p, j);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      std::size_t t = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face[t++] = s[i];
      b.set(*k.find(p - 1, face), j);
    }
  }
  return std::move(b).build();
}

}  // namespace

Z2Matrix boundary_matrix(const SimplicialComplex& k, int p) {
  if (p < 1 || p > k.dim())
    throw Error("boundary_matrix: dimension " + std::to_string(p) + " out of range [1, " +
                std::to_string(k.dim()) + "]");
  return boundary_or_empty(k, p);
}

bool is_cycle(const SimplicialComplex& k, const Chain& z) {
  if (z.dim < 0 || z.members.size() != k.size(z.dim))
    throw Error("is_cycle: chain does not belong to this complex");
  if (z.dim == 0) return true;
  Bitset bd(k.size(z.dim - 1));
  std::vector<VertexId> face(static_cast<std::size_t>(z.dim));
  z.members.for_each_set([&](std::size_t id) {
    const auto s = k.simplex(z.dim, static_cast<SimplexId>(id));
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      std::size_t t = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face[t++] = s[i];
      bd.flip(*k.find(z.dim - 1, face));
    }
  });
  return bd.none();
}

int betti(const SimplicialComplex& k, int p) {
  if (p < 0 || p > k.dim())
    throw Error("betti: dimension " + std::to_string(p) + " out of range [0, " +
                std::to_string(k.dim()) + "]");
  const std::size_t rp = p == 0 ? 0 : rank(boundary_or_empty(k, p));
  const std::size_t rp1 = rank(boundary_or_empty(k, p + 1));
  return static_cast<int>(k.size(p) - rp - rp1);
}

double chain_weight(const SimplicialComplex& k, const Chain& z) {
  double w = 0.0;
  z.members.for_each_set([&](std::size_t id) { w += k.weight(z.dim, static_cast<SimplexId>(id)); });
  return w;
}

std::string format_weight(double w) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, p);
}

}  // namespace homcoord
