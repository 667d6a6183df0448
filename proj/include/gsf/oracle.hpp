#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gsf/common_neighbor.hpp"
#include "gsf/graph.hpp"
#include "gsf/solvers.hpp"
#include "gsf/stream.hpp"

namespace gsf {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxVertices = 16;
inline constexpr std::size_t kOracleMaxK = 4;

enum class PropertyKind { Cluster, SubgraphFree, MinorFree };

struct Property {
  PropertyKind kind = PropertyKind::Cluster;
  std::optional<FamilySpec> family;  // absent for Cluster

  static Property cluster() { return {}; }
  static Property subgraph_free(FamilySpec f) { return {PropertyKind::SubgraphFree, std::move(f)}; }
  static Property minor_free(FamilySpec f) { return {PropertyKind::MinorFree, std::move(f)}; }
};

/// Property check by direct means, independent of the solvers' search code.
bool satisfies(const Graph& g, const Property& p);

struct OracleVerdict {
  bool yes = false;
  std::optional<VertexSet> witness;
  std::size_t checked_sets = 0;
};

/// Enumerates every vertex set of size <= k (by size, then lexicographically)
/// and stops at the first one whose removal satisfies the property.
/// Throws BudgetExceeded when n > 16 or k > 4.
OracleVerdict oracle_decide(const Graph& g, std::size_t k, const Property& p);

struct CnCounterexample {
  VertexSet x;
  std::size_t family_index = 0;  // into the catalog
  bool in_g = false;
  bool in_h = false;
};

/// Builds H from the AL stream and checks, for every X with |X| <= K and every
/// catalog member F with max degree <= d, that F occurs in g \ X exactly when
/// it occurs in H \ X. Returns the first mismatch.
std::optional<CnCounterexample> oracle_cn_equivalence(const Stream& al, const CnConfig& cfg,
                                                      const std::vector<Graph>& catalog);
/// Same on a seeded random exposure order of g.
std::optional<CnCounterexample> oracle_cn_equivalence(const Graph& g, const CnConfig& cfg,
                                                      const std::vector<Graph>& catalog, std::uint64_t seed = 0);
/// Variant that checks a given H.
std::optional<CnCounterexample> cn_equivalence_check(const Graph& g, const Graph& h, std::size_t max_x,
                                                     std::size_t d, const std::vector<Graph>& catalog);

/// Calls visit(X) for every X of {0..n-1} with |X| <= k, ascending by size
/// then lexicographically; stops early when visit returns true.
bool for_each_small_set(std::size_t n, std::size_t k, const std::function<bool(const VertexSet&)>& visit);

}  // namespace gsf
