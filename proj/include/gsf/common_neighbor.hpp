#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "gsf/graph.hpp"
#include "gsf/stream.hpp"

namespace gsf {

struct CnConfig {
  std::size_t K = 1;    // vertex-cover bound
  std::size_t d = 1;    // largest subset size tracked
  std::size_t ell = 1;  // common neighbors kept per subset

  /// Throws std::invalid_argument unless 1 <= d <= K and ell >= 1.
  void check() const;
};

/// ell = (d + 2) K, the threshold under which F-subgraph existence is
/// preserved for every F with max degree at most d.
CnConfig structural_config(std::size_t K, std::size_t d);

struct CommonNeighborSubgraph {
  Graph h;
  Matching matching;
  /// For each subset S of V(M) (|S| <= d) that admitted at least one vertex:
  /// the number of outside vertices stored on behalf of S.
  std::map<VertexSet, std::size_t> neighbor_counts;
};

/// One pass over an AL stream. Throws MalformedStream on invalid input.
CommonNeighborSubgraph run_common_neighbor(const Stream& s, const CnConfig& cfg);

struct CnViolation {
  int clause = 0;  // 1..4
  std::string message;
  std::optional<VertexSet> subset;
  std::optional<Edge> edge;
};

/// Checks, in order:
///  (i)   H is a subgraph of g and every H-edge touches V(M);
///  (ii)  M is a matching of H, maximal in g;
///  (iii) every g-edge inside V(M) is in H;
///  (iv)  every S in V(M), 1 <= |S| <= d, keeps at least
///        min(|N_g(S) \ V(M)|, ell) common neighbors outside V(M), and no
///        stored count exceeds ell.
std::optional<CnViolation> validate_cn_subgraph(const Graph& g, const CommonNeighborSubgraph& hs, const CnConfig& cfg);

struct CnSpaceReport {
  std::size_t edges = 0;
  std::size_t matching_edges = 0;
  std::size_t tracked_subsets = 0;
  std::size_t words = 0;      // 2 per edge and matching pair, d + 1 per tracked subset
  std::size_t edge_bound = 0; // C (K^2 + K^d ell d), C = 2^(d+1)
  bool within_bound = true;
};

CnSpaceReport cn_space_report(const CommonNeighborSubgraph& hs, const CnConfig& cfg);

}  // namespace gsf
