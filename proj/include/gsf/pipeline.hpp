#pragma once

#include <cstddef>

#include "gsf/common_neighbor.hpp"
#include "gsf/solvers.hpp"
#include "gsf/stream.hpp"

namespace gsf {

enum class Containment { Subgraph, Minor };

struct PipelineReport {
  Solution solution;
  CnConfig config;
  CnSpaceReport space;
  CommonNeighborSubgraph sketch;
};

/// Two stages: the common neighbor subgraph with d = Δ(F) and ell = (d+2)K,
/// then the offline branching solver on H. When K < d the sketch is built
/// with K raised to d, which keeps the vertex-cover promise intact.
PipelineReport run_deletion_pipeline(const Stream& al, const FamilySpec& fam, Containment mode, std::size_t K,
                                     std::size_t k);

}  // namespace gsf
