#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsf/graph.hpp"

namespace gsf {

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FamilyKind { Explicit, AllCycles, EvenCycles, OddCycles, Triangle };

std::string_view to_string(FamilyKind k);

/// Forbidden family F: an explicit list of connected graphs, or one of the
/// cycle families (never materialized).
class FamilySpec {
 public:
  static FamilySpec explicit_list(std::vector<Graph> graphs);
  static FamilySpec all_cycles() { return FamilySpec(FamilyKind::AllCycles); }
  static FamilySpec even_cycles() { return FamilySpec(FamilyKind::EvenCycles); }
  static FamilySpec odd_cycles() { return FamilySpec(FamilyKind::OddCycles); }
  static FamilySpec triangle() { return FamilySpec(FamilyKind::Triangle); }

  FamilyKind kind() const noexcept { return kind_; }
  const std::vector<Graph>& graphs() const noexcept { return graphs_; }
  /// Δ(F); 2 for every cycle kind.
  std::size_t max_degree() const;

 private:
  explicit FamilySpec(FamilyKind k) : kind_(k) {}
  FamilyKind kind_ = FamilyKind::Explicit;
  std::vector<Graph> graphs_;
};

struct Solution {
  bool yes = false;
  VertexSet x;  // meaningful only when yes

  static Solution no() { return {}; }
  static Solution found(VertexSet x) { return {true, std::move(x)}; }
};

/// Vertex set of some copy of a member of `fam` in g, chosen deterministically:
/// lexicographically least triangle; a shortest cycle (of the required parity)
/// for the other cycle kinds; for explicit lists, the first member found in
/// list order.
std::optional<VertexSet> find_forbidden_subgraph(const Graph& g, const FamilySpec& fam);

/// Union of the branch sets of some minor model of a member of `fam`.
std::optional<VertexSet> find_forbidden_minor(const Graph& g, const FamilySpec& fam);

/// Cluster vertex deletion by 3-way branching on an induced P3.
Solution solve_cvd(const Graph& g, std::size_t k);

/// F-subgraph deletion by branching on the vertices of a forbidden copy.
Solution solve_subgraph_deletion(const Graph& g, const FamilySpec& fam, std::size_t k);

/// F-minor deletion for explicit families. AllCycles and Triangle are
/// redirected to subgraph deletion of all cycles (a graph has a K3 minor iff
/// it has a cycle); parity cycle kinds are rejected.
Solution solve_minor_deletion(const Graph& g, const FamilySpec& fam, std::size_t k);

/// Problem names accepted by the CLI and the pipelines.
enum class Problem { CVD, FVS, ECT, OCT, TD, Subgraph, Minor };
Problem parse_problem(std::string_view s);
std::string_view to_string(Problem p);
/// Family for the named cycle problems; Subgraph/Minor take `explicit_graphs`.
FamilySpec family_for(Problem p, std::vector<Graph> explicit_graphs = {});

}  // namespace gsf
