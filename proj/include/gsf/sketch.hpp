#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gsf/graph.hpp"

namespace gsf {

// Arithmetic in GF(2^61 - 1).
namespace field {
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t base, std::uint64_t exp);
}  // namespace field

/// SplitMix64 finalizer; derives independent child seeds from a parent seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// h(x) = ((a*x + b) mod p) mod m + 1, p = 2^61 - 1. Values land in 1..m.
class PairwiseHash {
 public:
  PairwiseHash() = default;
  /// Forced coefficients; mostly for tests. Requires 1 <= a < p, b < p, m >= 1.
  static PairwiseHash with_coefficients(std::uint64_t a, std::uint64_t b, std::uint64_t m);

  std::uint64_t operator()(std::uint64_t x) const { return raw(x) % m_ + 1; }
  /// (a*x + b) mod p, before range reduction.
  std::uint64_t raw(std::uint64_t x) const;

  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  std::uint64_t range() const noexcept { return m_; }
  static constexpr std::uint64_t prime() noexcept { return field::kPrime; }
  /// Storage in machine words (a and b; p and m are shared configuration).
  static constexpr std::size_t words() noexcept { return 2; }

 private:
  std::uint64_t a_ = 1;
  std::uint64_t b_ = 0;
  std::uint64_t m_ = 1;
};

/// Draws a, b from a generator seeded with `seed`. `universe` must be below p.
PairwiseHash sample_hash(std::uint64_t seed, std::uint64_t universe, std::uint64_t m);

std::size_t ceil_log2(std::uint64_t x);

/// One-sparse recovery cell.
struct SparseCell {
  std::int64_t count = 0;
  std::int64_t id_sum = 0;
  std::uint64_t check_sum = 0;  // sum of delta * z^x over GF(p)

  bool is_zero() const { return count == 0 && id_sum == 0 && check_sum == 0; }
  friend bool operator==(const SparseCell&, const SparseCell&) = default;
};

/// Linear sketch over a dynamic set of items in [0, universe).
///
/// Level j holds the items whose level hash has at least j leading zero bits
/// (of 61), so level j samples each item with probability 2^-j. Each level is
/// a one-sparse cell; a query scans from the sparsest level down and returns
/// the first cell that verifies as holding exactly one item. Cells are
/// allocated on the first update; an all-zero sampler equals a fresh one.
class L0Sampler {
 public:
  L0Sampler() = default;
  L0Sampler(std::uint64_t universe, std::uint64_t seed);

  void update(std::uint64_t item, int delta);
  std::optional<std::uint64_t> query() const;

  std::uint64_t universe() const noexcept { return universe_; }
  std::size_t level_count() const noexcept { return levels_ + 1; }
  std::size_t repetitions() const noexcept { return reps_; }
  /// Deepest level that holds `item` in repetition r.
  std::size_t level_of(std::uint64_t item, std::size_t r = 0) const;
  /// Net count over all items.
  std::int64_t total_count() const { return cells_.empty() ? 0 : cells_[0].count; }
  bool is_zero() const;

  /// Logical size in words: per repetition, three per level plus the level
  /// hash (a, b) and z.
  std::size_t words() const noexcept { return reps_ * (level_count() * 3 + 3); }
  static std::size_t words_for(std::uint64_t universe) {
    return repetitions_for(universe) * ((levels_for(universe) + 1) * 3 + 3);
  }
  /// Words actually allocated right now.
  std::size_t materialized_words() const noexcept { return cells_.size() * 3 + reps_ * 3; }

  /// L = ceil(2 log2 universe).
  static std::size_t levels_for(std::uint64_t universe);
  /// Independent copies, ceil(log2 universe) (at least one).
  static std::size_t repetitions_for(std::uint64_t universe);

  /// Cells of all repetitions, repetition-major.
  const std::vector<SparseCell>& cells() const noexcept { return cells_; }
  friend bool operator==(const L0Sampler& a, const L0Sampler& b);

 private:
  std::optional<std::uint64_t> query_rep(std::size_t r) const;

  std::uint64_t universe_ = 1;
  std::size_t levels_ = 0;
  std::size_t reps_ = 1;
  std::vector<PairwiseHash> level_hash_;
  std::vector<std::uint64_t> z_;
  std::vector<SparseCell> cells_;
};

/// Stores the live multiset exactly; query picks uniformly with a generator
/// seeded by the construction seed. Used for differential testing against
/// L0Sampler.
class ExactSampler {
 public:
  ExactSampler() = default;
  ExactSampler(std::uint64_t universe, std::uint64_t seed) : universe_(universe), seed_(seed) {}

  void update(std::uint64_t item, int delta);
  std::optional<std::uint64_t> query() const;

  std::int64_t total_count() const;
  bool is_zero() const { return counts_.empty(); }
  std::vector<std::uint64_t> live_items() const;
  std::size_t words() const noexcept { return 2 * counts_.size() + 1; }
  std::size_t materialized_words() const noexcept { return words(); }
  static std::size_t words_for(std::uint64_t) { return 1; }

 private:
  std::uint64_t universe_ = 1;
  std::uint64_t seed_ = 0;
  std::map<std::uint64_t, std::int64_t> counts_;
};

struct GridConfig {
  std::size_t n = 0;       // vertices
  std::size_t K = 1;       // vertex-cover bound
  std::size_t alpha = 16;  // hash count factor
  std::size_t beta = 10;   // label count factor
  std::uint64_t seed = 0;

  std::size_t hash_count() const;
  std::size_t label_count() const;
  std::size_t cells_per_hash() const;
  std::size_t total_cells() const { return hash_count() * cells_per_hash(); }
  std::uint64_t edge_universe() const;
};

struct SpaceRecord {
  std::size_t hashes = 0;
  std::size_t cells = 0;
  std::size_t words_per_cell = 0;
  std::size_t total_words = 0;
};

/// Closed-form sketch size for the ℓ0-sampler grid.
SpaceRecord grid_space(const GridConfig& cfg);

/// alpha*ceil(log2 n) hash functions into beta*K labels; one sampler for each
/// hash and each unordered label pair {r, s}, r <= s. Edge (u,v) is fed to
/// the cell {h_i(u), h_i(v)} of every hash i as item min*n + max.
template <class Sampler>
class BasicSamplerGrid {
 public:
  explicit BasicSamplerGrid(const GridConfig& cfg);

  void feed(Vertex u, Vertex v, int delta);
  /// Union over all cells of the queried edges.
  Graph extract() const;
  /// Cells with non-zero net count whose query came back empty during the
  /// last extract().
  std::size_t extraction_failures() const noexcept { return failures_; }

  const GridConfig& config() const noexcept { return cfg_; }
  const std::vector<PairwiseHash>& hashes() const noexcept { return hashes_; }
  std::size_t cell_index(std::uint64_t r, std::uint64_t s) const;
  /// Cell for hash i and labels {r, s}; nullptr if never touched.
  const Sampler* cell(std::size_t hash_index, std::uint64_t r, std::uint64_t s) const;
  std::size_t touched_cells() const noexcept { return cells_.size(); }

  /// Space of the full grid (every cell, touched or not).
  std::size_t space_words() const;
  std::size_t materialized_words() const;

  std::uint64_t encode(Vertex u, Vertex v) const;
  Edge decode(std::uint64_t item) const;

 private:
  GridConfig cfg_;
  std::vector<PairwiseHash> hashes_;
  std::map<std::size_t, Sampler> cells_;  // key: hash_index * cells_per_hash + cell_index
  mutable std::size_t failures_ = 0;
};

using SamplerGrid = BasicSamplerGrid<L0Sampler>;
using ExactSamplerGrid = BasicSamplerGrid<ExactSampler>;

extern template class BasicSamplerGrid<L0Sampler>;
extern template class BasicSamplerGrid<ExactSampler>;

}  // namespace gsf
