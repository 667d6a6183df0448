#include "gsf/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace gsf {

// --- Graph ----------------------------------------------------------------

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adj_.size()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(adj_.size()));
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) return false;
  au.erase(it);
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --num_edges_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::non_isolated() const {
  VertexSet out;
  for (Vertex v = 0; v < adj_.size(); ++v) {
    if (!adj_[v].empty()) out.push_back(v);
  }
  return out;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.max_degree = g.max_degree();
  if (g.num_vertices() > 0) {
    s.avg_degree = 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
  }
  s.vc_size = exact_min_vc(g, g.num_vertices()).value_or(g.num_vertices());
  return s;
}

bool Matching::contains(Vertex v) const {
  return std::binary_search(matched_vertices.begin(), matched_vertices.end(), v);
}

// --- structure ------------------------------------------------------------

std::optional<Triple> find_induced_p3(const Graph& g) {
  for (Vertex b = 0; b < g.num_vertices(); ++b) {
    auto nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.has_edge(nb[i], nb[j])) return Triple{nb[i], b, nb[j]};
      }
    }
  }
  return std::nullopt;
}

bool is_cluster_graph(const Graph& g) { return !find_induced_p3(g).has_value(); }

Matching greedy_maximal_matching(const Graph& g, std::span<const Edge> edge_order) {
  std::vector<char> matched(g.num_vertices(), 0);
  Matching m;
  for (const Edge& e : edge_order) {
    if (!g.has_edge(e.u, e.v)) {
      throw GraphError("edge order contains a non-edge");
    }
    if (!matched[e.u] && !matched[e.v]) {
      matched[e.u] = matched[e.v] = 1;
      m.pairs.push_back(e);
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (matched[v]) m.matched_vertices.push_back(v);
  }
  return m;
}

namespace {

struct DisjointSets {
  std::vector<Vertex> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Vertex find(Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool has_cycle(const Graph& g) {
  DisjointSets ds(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (!ds.unite(e.u, e.v)) return true;
  }
  return false;
}

std::size_t count_components(const Graph& g) {
  DisjointSets ds(g.num_vertices());
  std::size_t comps = g.num_vertices();
  for (const Edge& e : g.edges()) {
    if (ds.unite(e.u, e.v)) --comps;
  }
  return comps;
}

// --- subgraph search ------------------------------------------------------

namespace {

// Order pattern vertices so each one (after the first of its component) has
// an already-placed neighbor; prefer high-degree vertices first.
std::vector<Vertex> connectivity_order(const Graph& f) {
  const std::size_t k = f.num_vertices();
  std::vector<Vertex> order;
  std::vector<char> placed(k, 0);
  std::vector<std::size_t> placed_nbrs(k, 0);
  while (order.size() < k) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (!found || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && f.degree(v) > f.degree(best))) {
        best = v;
        found = true;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : f.neighbors(best)) ++placed_nbrs[w];
  }
  return order;
}

class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& g, const Graph& f)
      : g_(g), f_(f), order_(connectivity_order(f)), image_(f.num_vertices(), kUnset),
        used_(g.num_vertices(), 0) {}

  bool run() { return place(0); }
  std::vector<Vertex> image() const { return image_; }

 private:
  static constexpr Vertex kUnset = ~Vertex{0};

  bool fits(Vertex fv, Vertex gv) const {
    if (used_[gv] || g_.degree(gv) < f_.degree(fv)) return false;
    for (Vertex fw : f_.neighbors(fv)) {
      if (image_[fw] != kUnset && !g_.has_edge(gv, image_[fw])) return false;
    }
    return true;
  }

  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    const Vertex fv = order_[idx];
    Vertex anchor = kUnset;
    for (Vertex fw : f_.neighbors(fv)) {
      if (image_[fw] != kUnset) {
        anchor = image_[fw];
        break;
      }
    }
    auto try_vertex = [&](Vertex gv) {
      if (!fits(fv, gv)) return false;
      image_[fv] = gv;
      used_[gv] = 1;
      if (place(idx + 1)) return true;
      used_[gv] = 0;
      image_[fv] = kUnset;
      return false;
    };
    if (anchor != kUnset) {
      for (Vertex gv : g_.neighbors(anchor)) {
        if (try_vertex(gv)) return true;
      }
    } else {
      for (Vertex gv = 0; gv < g_.num_vertices(); ++gv) {
        if (try_vertex(gv)) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const Graph& f_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& f) {
  if (f.num_vertices() > g.num_vertices() || f.num_edges() > g.num_edges()) return std::nullopt;
  SubgraphSearch search(g, f);
  if (!search.run()) return std::nullopt;
  return search.image();
}

bool contains_subgraph(const Graph& g, const Graph& f) { return find_subgraph(g, f).has_value(); }

// --- minor search ---------------------------------------------------------

namespace {

bool is_connected_nonempty(const Graph& f) {
  return f.num_vertices() > 0 && count_components(f) == 1;
}

std::size_t min_degree(const Graph& f) {
  std::size_t best = f.num_vertices() == 0 ? 0 : f.degree(0);
  for (Vertex v = 0; v < f.num_vertices(); ++v) best = std::min(best, f.degree(v));
  return best;
}

// Branch-set search. Pattern vertices are placed in connectivity order; for
// each, every connected set of free host vertices touching the branch sets of
// its placed pattern-neighbors is tried.
class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& f, std::vector<char> alive)
      : g_(g), f_(f), order_(connectivity_order(f)), owner_(g.num_vertices(), kFree),
        alive_(std::move(alive)), sets_(f.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) free_count_ += alive_[v] ? 1 : 0;
  }

  bool run() { return place(0); }
  MinorModel model() const {
    MinorModel out = sets_;
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
  }

 private:
  static constexpr Vertex kFree = ~Vertex{0};

  bool is_free(Vertex v) const { return alive_[v] && owner_[v] == kFree; }

  bool touches(const VertexSet& set, Vertex target_owner) const {
    for (Vertex v : set) {
      for (Vertex w : g_.neighbors(v)) {
        if (owner_[w] == target_owner) return true;
      }
    }
    return false;
  }

  bool satisfied(Vertex fv) const {
    for (Vertex fw : f_.neighbors(fv)) {
      if (!sets_[fw].empty() && !touches(sets_[fv], fw)) return false;
    }
    return true;
  }

  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    const Vertex fv = order_[idx];
    const std::size_t remaining_after = order_.size() - idx - 1;
    if (free_count_ < remaining_after + 1) return false;
    const std::size_t limit = free_count_ - remaining_after;

    // Roots: if fv has a placed neighbor, the set must contain a free vertex
    // adjacent to that neighbor's branch set.
    Vertex anchor = kFree;
    for (Vertex fw : f_.neighbors(fv)) {
      if (!sets_[fw].empty()) {
        anchor = fw;
        break;
      }
    }
    VertexSet roots;
    if (anchor != kFree) {
      for (Vertex v : sets_[anchor]) {
        for (Vertex w : g_.neighbors(v)) {
          if (is_free(w)) roots.push_back(w);
        }
      }
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    } else {
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        if (is_free(v)) roots.push_back(v);
      }
    }

    std::vector<char> banned(g_.num_vertices(), 0);
    for (Vertex r : roots) {
      claim(fv, r);
      VertexSet frontier;
      extend_frontier(r, banned, frontier);
      if (grow(idx, fv, frontier, banned, limit)) return true;
      release(fv, r);
      banned[r] = 1;  // later roots enumerate sets without r
    }
    return false;
  }

  // Enumerates connected supersets of sets_[fv] using the frontier; each set
  // is produced once (include-or-ban branching on frontier vertices).
  bool grow(std::size_t idx, Vertex fv, VertexSet frontier, std::vector<char>& banned,
            std::size_t limit) {
    if (satisfied(fv) && place(idx + 1)) return true;
    if (sets_[fv].size() >= limit) return false;
    std::vector<Vertex> newly_banned;
    bool ok = false;
    while (!frontier.empty()) {
      Vertex w = frontier.back();
      frontier.pop_back();
      if (banned[w] || !is_free(w)) continue;
      claim(fv, w);
      VertexSet next = frontier;
      extend_frontier(w, banned, next);
      if (grow(idx, fv, std::move(next), banned, limit)) {
        ok = true;
        break;
      }
      release(fv, w);
      banned[w] = 1;
      newly_banned.push_back(w);
    }
    for (Vertex w : newly_banned) banned[w] = 0;
    return ok;
  }

  void extend_frontier(Vertex v, const std::vector<char>& banned, VertexSet& frontier) const {
    for (Vertex w : g_.neighbors(v)) {
      if (is_free(w) && !banned[w] && std::find(frontier.begin(), frontier.end(), w) == frontier.end()) {
        frontier.push_back(w);
      }
    }
  }

  void claim(Vertex fv, Vertex v) {
    owner_[v] = fv;
    sets_[fv].push_back(v);
    --free_count_;
  }
  void release(Vertex fv, Vertex v) {
    owner_[v] = kFree;
    sets_[fv].pop_back();
    ++free_count_;
  }

  const Graph& g_;
  const Graph& f_;
  std::vector<Vertex> order_;
  std::vector<Vertex> owner_;
  std::vector<char> alive_;
  MinorModel sets_;
  std::size_t free_count_ = 0;
};

}  // namespace

std::optional<MinorModel> find_minor(const Graph& g, const Graph& f) {
  if (f.num_vertices() == 0) return MinorModel{};
  if (f.num_vertices() > g.num_vertices() || f.num_edges() > g.num_edges()) return std::nullopt;

  std::vector<char> alive(g.num_vertices(), 1);
  // A connected pattern of minimum degree >= 2 never needs a host vertex of
  // degree <= 1: such a vertex is either a whole branch set of degree <= 1 or
  // a removable leaf of a larger one.
  if (is_connected_nonempty(f) && min_degree(f) >= 2) {
    std::vector<std::size_t> deg(g.num_vertices());
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      deg[v] = g.degree(v);
      if (deg[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      if (!alive[v]) continue;
      alive[v] = 0;
      for (Vertex w : g.neighbors(v)) {
        if (alive[w] && --deg[w] == 1) queue.push_back(w);
      }
    }
  }
  MinorSearch search(g, f, std::move(alive));
  if (!search.run()) return std::nullopt;
  return search.model();
}

bool contains_minor(const Graph& g, const Graph& f) { return find_minor(g, f).has_value(); }

// --- vertex cover ---------------------------------------------------------

namespace {

bool cover_within(Graph& g, std::size_t budget, VertexSet& chosen) {
  Vertex best = 0;
  std::size_t best_deg = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > best_deg) {
      best_deg = g.degree(v);
      best = v;
    }
  }
  if (best_deg == 0) return true;
  if (budget == 0) return false;
  // Each chosen vertex covers at most best_deg edges.
  if (g.num_edges() > budget * best_deg) return false;

  const std::vector<Vertex> nbrs(g.neighbors(best).begin(), g.neighbors(best).end());

  // Branch 1: take `best`.
  for (Vertex w : nbrs) g.remove_edge(best, w);
  chosen.push_back(best);
  if (cover_within(g, budget - 1, chosen)) return true;
  chosen.pop_back();
  for (Vertex w : nbrs) g.add_edge(best, w);

  // Branch 2: leave `best` out, so all its neighbors are taken.
  if (nbrs.size() > budget) return false;
  std::vector<Edge> removed;
  for (Vertex w : nbrs) {
    const std::vector<Vertex> wn(g.neighbors(w).begin(), g.neighbors(w).end());
    for (Vertex x : wn) {
      g.remove_edge(w, x);
      removed.emplace_back(w, x);
    }
    chosen.push_back(w);
  }
  if (cover_within(g, budget - nbrs.size(), chosen)) return true;
  chosen.resize(chosen.size() - nbrs.size());
  for (const Edge& e : removed) g.add_edge(e.u, e.v);
  return false;
}

}  // namespace

std::optional<VertexSet> min_vertex_cover(const Graph& g, std::size_t cap) {
  for (std::size_t k = 0; k <= cap; ++k) {
    Graph work = g;
    VertexSet chosen;
    if (cover_within(work, k, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> exact_min_vc(const Graph& g, std::size_t cap) {
  auto cover = min_vertex_cover(g, cap);
  if (!cover) return std::nullopt;
  return cover->size();
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> x) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : x) {
    if (v >= g.num_vertices()) throw GraphError("deleted vertex out of range");
    gone[v] = 1;
  }
  Graph out(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) out.add_edge(e.u, e.v);
  }
  return out;
}

// --- named graphs ---------------------------------------------------------

Graph make_path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  Graph g = make_path(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

Graph make_complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  }
  return g;
}

Graph make_paw() {
  Graph g = make_complete(3);
  Graph out(4);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  out.add_edge(2, 3);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.num_vertices() + b.num_vertices());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (const Edge& e : b.edges()) out.add_edge(e.u + shift, e.v + shift);
  return out;
}

// --- text format ----------------------------------------------------------

namespace {

// Next line that is not blank after stripping a '#' comment.
bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

bool read_block(std::istream& in, std::size_t& lineno, Graph& out) {
  std::string line;
  if (!next_content_line(in, line, lineno)) return false;
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError(lineno, "expected header 'n m'");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno, "unexpected end of input");
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v)) throw ParseError(lineno, "expected edge 'u v'");
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (!g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
      throw ParseError(lineno, "duplicate edge");
    }
  }
  out = std::move(g);
  return true;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::size_t lineno = 0;
  Graph g;
  if (!read_block(in, lineno, g)) throw ParseError(lineno, "empty graph input");
  return g;
}

std::vector<Graph> read_graph_list(std::istream& in) {
  std::size_t lineno = 0;
  std::vector<Graph> out;
  Graph g;
  while (read_block(in, lineno, g)) out.push_back(std::move(g));
  return out;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

}  // namespace gsf
