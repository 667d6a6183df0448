#include "gsf/solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace gsf {

std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Explicit: return "explicit";
    case FamilyKind::AllCycles: return "all-cycles";
    case FamilyKind::EvenCycles: return "even-cycles";
    case FamilyKind::OddCycles: return "odd-cycles";
    case FamilyKind::Triangle: return "triangle";
  }
  return "?";
}

FamilySpec FamilySpec::explicit_list(std::vector<Graph> graphs) {
  if (graphs.empty()) throw UnsupportedFamily("empty forbidden family");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& f = graphs[i];
    if (f.num_edges() == 0 || count_components(f) != 1) {
      throw UnsupportedFamily("family member " + std::to_string(i + 1) + " is not a connected graph with an edge");
    }
  }
  FamilySpec fam(FamilyKind::Explicit);
  fam.graphs_ = std::move(graphs);
  return fam;
}

std::size_t FamilySpec::max_degree() const {
  if (kind_ != FamilyKind::Explicit) return 2;
  std::size_t d = 0;
  for (const Graph& f : graphs_) d = std::max(d, f.max_degree());
  return d;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::optional<VertexSet> least_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && g.has_edge(u, w)) return VertexSet{u, v, w};
      }
    }
  }
  return std::nullopt;
}

std::vector<Vertex> path_to_root(const std::vector<std::size_t>& parent, Vertex x) {
  std::vector<Vertex> path;
  for (std::size_t cur = x; cur != kNone; cur = parent[cur]) path.push_back(static_cast<Vertex>(cur));
  return path;
}

// Shortest cycle: BFS from every root; a non-tree edge (x, y) closes a walk
// of length dist[x] + dist[y] + 1. The global minimum is a simple cycle.
std::optional<VertexSet> shortest_cycle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = kNone;
  VertexSet best_set;
  std::vector<std::size_t> dist(n), parent(n);
  for (Vertex r = 0; r < n; ++r) {
    if (g.degree(r) < 2) continue;
    std::fill(dist.begin(), dist.end(), kNone);
    std::fill(parent.begin(), parent.end(), kNone);
    std::queue<Vertex> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kNone) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y && dist[y] >= dist[x]) {
          const std::size_t len = dist[x] + dist[y] + 1;
          if (len < best) {
            auto a = path_to_root(parent, x);
            auto b = path_to_root(parent, y);
            VertexSet s(a.begin(), a.end());
            s.insert(s.end(), b.begin(), b.end());
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (s.size() == len) {
              best = len;
              best_set = std::move(s);
            }
          }
        }
      }
    }
  }
  if (best == kNone) return std::nullopt;
  return best_set;
}

// Shortest odd cycle: BFS over (vertex, parity) states from every root; the
// shortest odd closed walk through r ends at (r, 1) and is a simple cycle at
// the global minimum.
std::optional<VertexSet> shortest_odd_cycle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = kNone;
  VertexSet best_set;
  std::vector<std::size_t> dist(2 * n), parent(2 * n);
  for (Vertex r = 0; r < n; ++r) {
    if (g.degree(r) < 2) continue;
    std::fill(dist.begin(), dist.end(), kNone);
    std::fill(parent.begin(), parent.end(), kNone);
    std::queue<std::size_t> q;
    dist[2 * r] = 0;
    q.push(2 * r);
    while (!q.empty()) {
      const std::size_t s = q.front();
      q.pop();
      if (dist[s] + 1 >= best) break;
      const Vertex x = static_cast<Vertex>(s / 2);
      const std::size_t par = s % 2;
      for (Vertex y : g.neighbors(x)) {
        const std::size_t t = 2 * y + (1 - par);
        if (dist[t] != kNone) continue;
        dist[t] = dist[s] + 1;
        parent[t] = s;
        q.push(t);
      }
    }
    const std::size_t target = 2 * r + 1;
    if (dist[target] == kNone || dist[target] >= best) continue;
    VertexSet s;
    for (std::size_t cur = target; cur != kNone; cur = parent[cur]) s.push_back(static_cast<Vertex>(cur / 2));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() == dist[target]) {
      best = dist[target];
      best_set = std::move(s);
    }
  }
  if (best == kNone) return std::nullopt;
  return best_set;
}

// Simple cycle of exactly `len` vertices whose least vertex is `start`.
bool cycle_through(const Graph& g, Vertex start, std::size_t len, std::vector<Vertex>& path,
                   std::vector<char>& on_path) {
  const Vertex last = path.back();
  if (path.size() == len) return g.has_edge(last, start);
  for (Vertex y : g.neighbors(last)) {
    if (y <= start || on_path[y]) continue;
    path.push_back(y);
    on_path[y] = 1;
    if (cycle_through(g, start, len, path, on_path)) return true;
    on_path[y] = 0;
    path.pop_back();
  }
  return false;
}

// Shortest even cycle by iterative deepening over lengths 4, 6, ...
std::optional<VertexSet> shortest_even_cycle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (!has_cycle(g)) return std::nullopt;
  std::vector<char> on_path(n, 0);
  for (std::size_t len = 4; len <= n; len += 2) {
    for (Vertex s = 0; s < n; ++s) {
      if (g.degree(s) < 2) continue;
      std::vector<Vertex> path{s};
      on_path[s] = 1;
      const bool found = cycle_through(g, s, len, path, on_path);
      for (Vertex v : path) on_path[v] = 0;
      if (found) {
        std::sort(path.begin(), path.end());
        return path;
      }
    }
  }
  return std::nullopt;
}

template <class Finder>
std::optional<VertexSet> branch(const Graph& g, std::size_t k, const Finder& find) {
  const auto witness = find(g);
  if (!witness) return VertexSet{};
  if (k == 0) return std::nullopt;
  for (Vertex v : *witness) {
    const Vertex del[1] = {v};
    if (auto rest = branch(delete_vertices(g, del), k - 1, find)) {
      rest->push_back(v);
      std::sort(rest->begin(), rest->end());
      return rest;
    }
  }
  return std::nullopt;
}

template <class Finder>
Solution search(const Graph& g, std::size_t k, const Finder& find, const std::function<bool(const Graph&)>& holds,
                const char* what) {
  auto x = branch(g, k, find);
  if (!x) return Solution::no();
  if (x->size() > k || !holds(delete_vertices(g, *x))) {
    throw std::logic_error(std::string(what) + ": certificate check failed");
  }
  return Solution::found(std::move(*x));
}

}  // namespace

std::optional<VertexSet> find_forbidden_subgraph(const Graph& g, const FamilySpec& fam) {
  switch (fam.kind()) {
    case FamilyKind::Triangle: return least_triangle(g);
    case FamilyKind::AllCycles: return shortest_cycle(g);
    case FamilyKind::OddCycles: return shortest_odd_cycle(g);
    case FamilyKind::EvenCycles: return shortest_even_cycle(g);
    case FamilyKind::Explicit:
      for (const Graph& f : fam.graphs()) {
        if (auto image = find_subgraph(g, f)) {
          std::sort(image->begin(), image->end());
          return *image;
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<VertexSet> find_forbidden_minor(const Graph& g, const FamilySpec& fam) {
  if (fam.kind() != FamilyKind::Explicit) throw UnsupportedFamily("minor search needs an explicit family");
  for (const Graph& f : fam.graphs()) {
    if (auto model = find_minor(g, f)) {
      VertexSet s;
      for (const auto& set : *model) s.insert(s.end(), set.begin(), set.end());
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return s;
    }
  }
  return std::nullopt;
}

Solution solve_cvd(const Graph& g, std::size_t k) {
  auto find = [](const Graph& h) -> std::optional<VertexSet> {
    auto t = find_induced_p3(h);
    if (!t) return std::nullopt;
    return VertexSet{t->b, t->a, t->c};  // center first
  };
  return search(g, k, find, [](const Graph& h) { return is_cluster_graph(h); }, "solve_cvd");
}

Solution solve_subgraph_deletion(const Graph& g, const FamilySpec& fam, std::size_t k) {
  auto find = [&fam](const Graph& h) { return find_forbidden_subgraph(h, fam); };
  auto holds = [&fam](const Graph& h) { return !find_forbidden_subgraph(h, fam).has_value(); };
  return search(g, k, find, holds, "solve_subgraph_deletion");
}

Solution solve_minor_deletion(const Graph& g, const FamilySpec& fam, std::size_t k) {
  switch (fam.kind()) {
    case FamilyKind::AllCycles:
    case FamilyKind::Triangle: return solve_subgraph_deletion(g, FamilySpec::all_cycles(), k);
    case FamilyKind::EvenCycles:
    case FamilyKind::OddCycles: throw UnsupportedFamily("parity cycle families are not minor-closed targets");
    case FamilyKind::Explicit: break;
  }
  auto find = [&fam](const Graph& h) { return find_forbidden_minor(h, fam); };
  auto holds = [&fam](const Graph& h) {
    return std::none_of(fam.graphs().begin(), fam.graphs().end(), [&h](const Graph& f) { return contains_minor(h, f); });
  };
  return search(g, k, find, holds, "solve_minor_deletion");
}

Problem parse_problem(std::string_view s) {
  if (s == "cvd") return Problem::CVD;
  if (s == "fvs") return Problem::FVS;
  if (s == "ect") return Problem::ECT;
  if (s == "oct") return Problem::OCT;
  if (s == "td") return Problem::TD;
  if (s == "subgraph") return Problem::Subgraph;
  if (s == "minor") return Problem::Minor;
  throw std::invalid_argument("unknown problem '" + std::string(s) + "'");
}

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::CVD: return "cvd";
    case Problem::FVS: return "fvs";
    case Problem::ECT: return "ect";
    case Problem::OCT: return "oct";
    case Problem::TD: return "td";
    case Problem::Subgraph: return "subgraph";
    case Problem::Minor: return "minor";
  }
  return "?";
}

FamilySpec family_for(Problem p, std::vector<Graph> explicit_graphs) {
  switch (p) {
    case Problem::FVS: return FamilySpec::all_cycles();
    case Problem::ECT: return FamilySpec::even_cycles();
    case Problem::OCT: return FamilySpec::odd_cycles();
    case Problem::TD: return FamilySpec::triangle();
    case Problem::Subgraph:
    case Problem::Minor: return FamilySpec::explicit_list(std::move(explicit_graphs));
    case Problem::CVD: break;
  }
  throw std::invalid_argument("cvd has no forbidden subgraph family");
}

}  // namespace gsf
