// Shared helpers for the test binaries.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gsf/graph.hpp"
#include "gsf/stream.hpp"

namespace gsf::test {

/// P3, K3, C4, C5, K4.
inline std::vector<Graph> lemma_catalog() {
  return {make_path(3), make_complete(3), make_cycle(4), make_cycle(5), make_complete(4)};
}

inline Stream random_al(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return graph_to_stream(g, StreamModel::AL, order, seed);
}

/// Upper-triangle adjacency bits under the smallest labeling that respects a
/// vertex ordering by (degree, sorted neighbor degrees). Exact isomorphism
/// invariant for n <= 11.
inline std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> inv(n);
  for (Vertex v = 0; v < n; ++v) {
    inv[v].push_back(g.degree(v));
    std::vector<std::size_t> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return inv[a] < inv[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end)
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
  std::uint64_t best = ~std::uint64_t{0};
  while (true) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
    }
    best = std::min(best, code);
    std::size_t c = cells.size();
    while (c > 0) {
      auto [b, e] = cells[c - 1];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
      --c;
    }
    if (c == 0) break;
  }
  return best;
}

/// One representative per isomorphism class of graphs on exactly n vertices.
inline std::vector<Graph> graphs_up_to_iso(std::size_t n) {
  std::vector<Graph> level{Graph(1)};
  if (n == 0) return {Graph(0)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> next;
    for (const Graph& base : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        Graph g(m);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (Vertex v = 0; v + 1 < m; ++v) {
          if (mask >> v & 1U) g.add_edge(v, static_cast<Vertex>(m - 1));
        }
        if (seen.insert(canonical_code(g)).second) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

inline std::vector<Graph> connected_graphs_up_to_iso(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : graphs_up_to_iso(n)) {
    if (count_components(g) == 1) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gsf::test
