#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsf {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // kept sorted, no duplicates

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text readers; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Adjacency lists are kept sorted, so iteration order is deterministic and
/// `has_edge` is a binary search. Vertices never disappear: deleting a set X
/// leaves those ids isolated.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  /// Returns false if the edge was already present. Throws on self-loops and
  /// out-of-range ids.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  std::size_t max_degree() const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  /// Vertices with at least one incident edge.
  VertexSet non_isolated() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

struct GraphStats {
  std::size_t max_degree = 0;
  double avg_degree = 0.0;
  std::size_t vc_size = 0;
};

/// Exact statistics; the vertex cover is computed without a cap, so keep this
/// to graphs where that is affordable.
GraphStats graph_stats(const Graph& g);

struct Matching {
  std::vector<Edge> pairs;
  VertexSet matched_vertices;

  bool contains(Vertex v) const;
};

// --- structure ------------------------------------------------------------

struct Triple {
  Vertex a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Lexicographically least (center-first) induced P3 a-b-c with (a,b),(b,c)
/// present and (a,c) absent; returned as (a,b,c) with b the center.
std::optional<Triple> find_induced_p3(const Graph& g);
bool is_cluster_graph(const Graph& g);

/// Greedy matching over `edge_order`. Repeated edges are ignored. Edges not in
/// `g` are rejected.
Matching greedy_maximal_matching(const Graph& g, std::span<const Edge> edge_order);

bool has_cycle(const Graph& g);
std::size_t count_components(const Graph& g);

/// Non-induced subgraph containment by injective backtracking. `f` is meant
/// to be small (at most ~10 vertices).
bool contains_subgraph(const Graph& g, const Graph& f);
/// As above, returning the image of f's vertex i at position i.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& f);

/// Minor model: branch_sets[i] is the connected set of g-vertices that
/// represents vertex i of f.
using MinorModel = std::vector<VertexSet>;
std::optional<MinorModel> find_minor(const Graph& g, const Graph& f);
bool contains_minor(const Graph& g, const Graph& f);

/// VC(g) if it is at most `cap`, via bounded search on uncovered edges.
std::optional<std::size_t> exact_min_vc(const Graph& g, std::size_t cap);
/// A cover of size VC(g) when VC(g) <= cap.
std::optional<VertexSet> min_vertex_cover(const Graph& g, std::size_t cap);

Graph delete_vertices(const Graph& g, std::span<const Vertex> x);

// --- named graphs ---------------------------------------------------------

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_complete_bipartite(std::size_t a, std::size_t b);
/// Triangle with a pendant edge.
Graph make_paw();
Graph disjoint_union(const Graph& a, const Graph& b);

// --- text format ----------------------------------------------------------
// "n m" then m lines "u v", 1-based ids. '#' starts a comment.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);

/// Reads consecutive graph blocks until end of input.
std::vector<Graph> read_graph_list(std::istream& in);

}  // namespace gsf
