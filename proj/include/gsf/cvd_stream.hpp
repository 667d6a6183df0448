#pragma once

#include <cstddef>
#include <cstdint>

#include "gsf/graph.hpp"
#include "gsf/sketch.hpp"
#include "gsf/stream.hpp"

namespace gsf {

struct CvdParams {
  std::size_t n = 0;
  std::size_t K = 0;
  std::size_t k = 0;
  std::size_t alpha = 16;
  std::size_t beta = 10;
  std::uint64_t seed = 0;
  /// Swap the ℓ0-samplers for exact shadow samplers (differential testing).
  bool exact_samplers = false;

  /// Throws std::invalid_argument unless k <= K <= n and alpha, beta >= 1.
  void check() const;
  GridConfig grid() const { return GridConfig{n, K, alpha, beta, seed}; }
};

struct CvdReport {
  bool yes = false;
  VertexSet solution;                  // when yes; |solution| <= k
  std::size_t space_words = 0;         // full grid, closed form
  std::size_t materialized_words = 0;  // cells actually touched
  std::size_t sketch_edges = 0;        // |E(H)|
  std::size_t extraction_failures = 0; // non-empty cells that returned nothing
  Graph sketch;                        // H
};

/// Feeds every event of a DEA stream (EA streams are read as inserts) into a
/// sampler grid, extracts H, and solves cluster vertex deletion on (H, k).
CvdReport run_cvd(const Stream& s, const CvdParams& params);

/// Closed-form word count of the grid run_cvd would build.
std::size_t cvd_space_report(const CvdParams& params);

}  // namespace gsf
