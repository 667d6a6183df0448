#include "gsf/common_neighbor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gsf {

void CnConfig::check() const {
  if (d < 1 || d > K) throw std::invalid_argument("common neighbor config needs 1 <= d <= K");
  if (ell < 1) throw std::invalid_argument("common neighbor config needs ell >= 1");
}

CnConfig structural_config(std::size_t K, std::size_t d) { return CnConfig{K, d, (d + 2) * K}; }

namespace {

// Calls visit(S) for every nonempty S of `pool` (sorted) with |S| <= d,
// ordered by size, then lexicographically.
void for_each_subset(const VertexSet& pool, std::size_t d, const std::function<void(const VertexSet&)>& visit) {
  const std::size_t top = std::min(d, pool.size());
  VertexSet cur;
  std::vector<std::size_t> idx;
  for (std::size_t size = 1; size <= top; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      cur.clear();
      for (std::size_t i : idx) cur.push_back(pool[i]);
      visit(cur);
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

class CommonNeighborBuilder {
 public:
  CommonNeighborBuilder(std::size_t n, const CnConfig& cfg) : cfg_(cfg), matched_(n, 0), out_() {
    out_.h = Graph(n);
  }

  void expose(Vertex u, const std::vector<Vertex>& nbrs) {
    std::vector<Vertex> t;
    for (Vertex x : nbrs) {
      if (!matched_[u] && !matched_[x]) {
        matched_[u] = matched_[x] = 1;
        out_.matching.pairs.emplace_back(u, x);
      }
      if (matched_[x]) t.push_back(x);
    }
    if (matched_[u]) {
      for (Vertex x : t) out_.h.add_edge(u, x);
      return;
    }
    // u stays unmatched for good, so every neighbor must already be matched.
    if (t.size() != nbrs.size()) throw std::logic_error("common neighbor: unmatched vertex with unmatched neighbor");
    std::sort(t.begin(), t.end());
    VertexSet covered;  // u's H-neighbors so far
    for_each_subset(t, cfg_.d, [&](const VertexSet& s) {
      if (is_subset(s, covered)) return;
      if (counts_[s] >= cfg_.ell) return;
      for (Vertex z : s) out_.h.add_edge(u, z);
      ++out_.neighbor_counts[s];
      VertexSet grown;
      std::set_union(covered.begin(), covered.end(), s.begin(), s.end(), std::back_inserter(grown));
      for_each_subset(grown, cfg_.d, [&](const VertexSet& c) {
        if (!is_subset(c, covered)) ++counts_[c];
      });
      covered = std::move(grown);
    });
  }

  CommonNeighborSubgraph finish() {
    for (Vertex v = 0; v < matched_.size(); ++v) {
      if (matched_[v]) out_.matching.matched_vertices.push_back(v);
    }
    return std::move(out_);
  }

 private:
  CnConfig cfg_;
  std::vector<char> matched_;
  // |N_H(S) \ V(M)| for every S touched so far; exact because a vertex left
  // unmatched after its exposure is never matched later.
  std::map<VertexSet, std::size_t> counts_;
  CommonNeighborSubgraph out_;
};

std::size_t common_outside(const Graph& g, const VertexSet& s, const Matching& m) {
  std::size_t c = 0;
  for (Vertex v : g.neighbors(s.front())) {
    if (m.contains(v)) continue;
    if (std::all_of(s.begin() + 1, s.end(), [&](Vertex z) { return g.has_edge(v, z); })) ++c;
  }
  return c;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

}  // namespace

CommonNeighborSubgraph run_common_neighbor(const Stream& s, const CnConfig& cfg) {
  cfg.check();
  if (s.model != StreamModel::AL) throw std::invalid_argument("common neighbor needs an AL stream");
  require_valid(s);
  CommonNeighborBuilder b(s.n, cfg);
  for (const StreamEvent& ev : s.events) {
    const auto& x = std::get<VertexExpose>(ev);
    b.expose(x.v, x.neighbors);
  }
  return b.finish();
}

std::optional<CnViolation> validate_cn_subgraph(const Graph& g, const CommonNeighborSubgraph& hs, const CnConfig& cfg) {
  const Graph& h = hs.h;
  const Matching& m = hs.matching;
  if (h.num_vertices() != g.num_vertices()) return CnViolation{1, "vertex count differs", std::nullopt, std::nullopt};
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e.u, e.v)) return CnViolation{1, "edge of H missing from G", std::nullopt, e};
    if (!m.contains(e.u) && !m.contains(e.v)) return CnViolation{1, "edge of H avoids V(M)", std::nullopt, e};
  }
  std::vector<char> seen(g.num_vertices(), 0);
  for (const Edge& e : m.pairs) {
    if (!h.has_edge(e.u, e.v)) return CnViolation{2, "matching edge missing from H", std::nullopt, e};
    if (seen[e.u] || seen[e.v]) return CnViolation{2, "matching edges share a vertex", std::nullopt, e};
    seen[e.u] = seen[e.v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!seen[e.u] && !seen[e.v]) return CnViolation{2, "matching not maximal in G", std::nullopt, e};
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (static_cast<bool>(seen[v]) != m.contains(v)) {
      return CnViolation{2, "matched vertex list disagrees with pairs", VertexSet{v}, std::nullopt};
    }
  }
  for (const Edge& e : g.edges()) {
    if (seen[e.u] && seen[e.v] && !h.has_edge(e.u, e.v)) {
      return CnViolation{3, "edge inside V(M) missing from H", std::nullopt, e};
    }
  }
  for (const auto& [s, stored] : hs.neighbor_counts) {
    if (stored > cfg.ell) {
      return CnViolation{4, "stored count of " + set_text(s) + " exceeds ell", s, std::nullopt};
    }
    if (s.empty() || s.size() > cfg.d || !std::all_of(s.begin(), s.end(), [&](Vertex v) { return m.contains(v); })) {
      return CnViolation{4, "tracked set " + set_text(s) + " is not a small subset of V(M)", s, std::nullopt};
    }
    if (stored > common_outside(h, s, m)) {
      return CnViolation{4, "stored count of " + set_text(s) + " exceeds its H common neighbors", s, std::nullopt};
    }
  }
  std::optional<CnViolation> bad;
  for_each_subset(m.matched_vertices, cfg.d, [&](const VertexSet& s) {
    if (bad) return;
    const std::size_t want = std::min(common_outside(g, s, m), cfg.ell);
    const std::size_t have = common_outside(h, s, m);
    if (have < want) {
      bad = CnViolation{4,
                        set_text(s) + " keeps " + std::to_string(have) + " common neighbors, needs " +
                            std::to_string(want),
                        s, std::nullopt};
    }
  });
  return bad;
}

CnSpaceReport cn_space_report(const CommonNeighborSubgraph& hs, const CnConfig& cfg) {
  CnSpaceReport r;
  r.edges = hs.h.num_edges();
  r.matching_edges = hs.matching.pairs.size();
  r.tracked_subsets = hs.neighbor_counts.size();
  r.words = 2 * r.edges + 2 * r.matching_edges + (cfg.d + 1) * r.tracked_subsets;
  std::size_t kd = 1;
  for (std::size_t i = 0; i < cfg.d; ++i) kd *= cfg.K;
  r.edge_bound = (std::size_t{1} << (cfg.d + 1)) * (cfg.K * cfg.K + kd * cfg.ell * cfg.d);
  r.within_bound = r.edges <= r.edge_bound;
  return r;
}

}  // namespace gsf
