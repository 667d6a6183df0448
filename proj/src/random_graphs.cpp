#include "gsf/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace gsf {

Graph random_cover_graph(std::size_t n, std::size_t cover, double p, std::uint64_t seed) {
  if (cover > n) throw std::invalid_argument("cover larger than n");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t i = 0; i < cover; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(perm[i], perm[j]);
    }
  }
  return g;
}

Graph planted_cluster_graph(std::size_t n, std::size_t max_clique, std::size_t noise, double p, std::uint64_t seed) {
  if (noise > n || max_clique == 0) throw std::invalid_argument("bad planted cluster parameters");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph g(n);
  std::uniform_int_distribution<std::size_t> size_of(1, max_clique);
  std::size_t pos = noise;
  std::vector<std::vector<Vertex>> cliques;
  while (pos < n) {
    const std::size_t s = std::min(size_of(rng), n - pos);
    cliques.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                         perm.begin() + static_cast<std::ptrdiff_t>(pos + s));
    pos += s;
  }
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) g.add_edge(c[i], c[j]);
    }
  }
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < noise; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (perm[j] != perm[i] && coin(rng)) g.add_edge(perm[i], perm[j]);
    }
  }
  return g;
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace gsf
