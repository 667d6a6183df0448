#include "gsf/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

namespace gsf {

namespace {

bool closed_neighborhoods(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.has_edge(nb[i], nb[j])) return false;
      }
    }
  }
  return true;
}

bool forest(const Graph& g) {
  std::vector<Vertex> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Vertex(Vertex)> root = [&](Vertex v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
  for (const Edge& e : g.edges()) {
    const Vertex a = root(e.u);
    const Vertex b = root(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool bipartite(const Graph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

// A graph has no even cycle iff each of its blocks is a bridge or an odd cycle.
bool even_cycle_free(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> stack;
  bool ok = true;
  std::function<void(Vertex, Vertex, bool)> dfs = [&](Vertex v, Vertex parent, bool has_parent) {
    disc[v] = low[v] = ++timer;
    for (Vertex w : g.neighbors(v)) {
      if (!ok) return;
      if (has_parent && w == parent) continue;
      if (disc[w] == 0) {
        stack.emplace_back(v, w);
        dfs(w, v, true);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          // pop one block
          std::vector<Edge> block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == Edge(v, w)) break;
          }
          VertexSet verts;
          for (const Edge& e : block) {
            verts.push_back(e.u);
            verts.push_back(e.v);
          }
          std::sort(verts.begin(), verts.end());
          verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
          const bool bridge = block.size() == 1;
          const bool odd_cycle = block.size() == verts.size() && verts.size() % 2 == 1;
          if (!bridge && !odd_cycle) ok = false;
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n && ok; ++v) {
    if (disc[v] == 0) dfs(v, 0, false);
  }
  return ok;
}

bool triangle_free(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool satisfies(const Graph& g, const Property& p) {
  if (p.kind == PropertyKind::Cluster) return closed_neighborhoods(g);
  if (!p.family) throw std::invalid_argument("property needs a family");
  const FamilySpec& fam = *p.family;
  if (p.kind == PropertyKind::MinorFree) {
    switch (fam.kind()) {
      case FamilyKind::AllCycles:
      case FamilyKind::Triangle: return forest(g);
      case FamilyKind::EvenCycles:
      case FamilyKind::OddCycles: throw UnsupportedFamily("parity cycle families are not minor-closed targets");
      case FamilyKind::Explicit: break;
    }
    return std::none_of(fam.graphs().begin(), fam.graphs().end(), [&](const Graph& f) { return contains_minor(g, f); });
  }
  switch (fam.kind()) {
    case FamilyKind::AllCycles: return forest(g);
    case FamilyKind::OddCycles: return bipartite(g);
    case FamilyKind::EvenCycles: return even_cycle_free(g);
    case FamilyKind::Triangle: return triangle_free(g);
    case FamilyKind::Explicit: break;
  }
  return std::none_of(fam.graphs().begin(), fam.graphs().end(), [&](const Graph& f) { return contains_subgraph(g, f); });
}

bool for_each_small_set(std::size_t n, std::size_t k, const std::function<bool(const VertexSet&)>& visit) {
  VertexSet cur;
  if (visit(cur)) return true;
  std::vector<std::size_t> idx;
  for (std::size_t size = 1; size <= std::min(k, n); ++size) {
    idx.resize(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      cur.assign(idx.begin(), idx.end());
      if (visit(cur)) return true;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

OracleVerdict oracle_decide(const Graph& g, std::size_t k, const Property& p) {
  if (g.num_vertices() > kOracleMaxVertices || k > kOracleMaxK) {
    throw BudgetExceeded("oracle budget is n <= 16 and k <= 4");
  }
  OracleVerdict v;
  for_each_small_set(g.num_vertices(), k, [&](const VertexSet& x) {
    ++v.checked_sets;
    if (!satisfies(delete_vertices(g, x), p)) return false;
    v.yes = true;
    v.witness = x;
    return true;
  });
  return v;
}

std::optional<CnCounterexample> cn_equivalence_check(const Graph& g, const Graph& h, std::size_t max_x,
                                                     std::size_t d, const std::vector<Graph>& catalog) {
  std::optional<CnCounterexample> bad;
  for_each_small_set(g.num_vertices(), max_x, [&](const VertexSet& x) {
    const Graph gx = delete_vertices(g, x);
    const Graph hx = delete_vertices(h, x);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      if (catalog[i].max_degree() > d) continue;
      const bool in_g = contains_subgraph(gx, catalog[i]);
      const bool in_h = contains_subgraph(hx, catalog[i]);
      if (in_g != in_h) {
        bad = CnCounterexample{x, i, in_g, in_h};
        return true;
      }
    }
    return false;
  });
  return bad;
}

std::optional<CnCounterexample> oracle_cn_equivalence(const Stream& al, const CnConfig& cfg,
                                                      const std::vector<Graph>& catalog) {
  const Graph g = replay(al);
  const CommonNeighborSubgraph hs = run_common_neighbor(al, cfg);
  return cn_equivalence_check(g, hs.h, cfg.K, cfg.d, catalog);
}

std::optional<CnCounterexample> oracle_cn_equivalence(const Graph& g, const CnConfig& cfg,
                                                      const std::vector<Graph>& catalog, std::uint64_t seed) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return oracle_cn_equivalence(graph_to_stream(g, StreamModel::AL, order, seed), cfg, catalog);
}

}  // namespace gsf
