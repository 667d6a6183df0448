#pragma once

#include <cstddef>
#include <cstdint>

#include "gsf/graph.hpp"

namespace gsf {

/// Random graph whose edges all touch a hidden set of `cover` vertices, so
/// VC(g) <= cover. Each cover/other pair is an edge with probability p.
Graph random_cover_graph(std::size_t n, std::size_t cover, double p, std::uint64_t seed);

/// Cluster graph of small cliques plus `noise` vertices wired at random, so
/// deleting the noise vertices leaves a cluster graph. Clique sizes are drawn
/// from 1..max_clique; the result has VC <= (cliques' VC) + noise.
Graph planted_cluster_graph(std::size_t n, std::size_t max_clique, std::size_t noise, double p, std::uint64_t seed);

/// G(n, p).
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace gsf
