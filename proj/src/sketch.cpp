#include "gsf/sketch.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace gsf {

namespace field {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return result;
}

}  // namespace field

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// --- PairwiseHash -----------------------------------------------------------

PairwiseHash PairwiseHash::with_coefficients(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (a == 0 || a >= field::kPrime || b >= field::kPrime || m == 0) {
    throw std::invalid_argument("pairwise hash needs 1 <= a < p, 0 <= b < p, m >= 1");
  }
  PairwiseHash h;
  h.a_ = a;
  h.b_ = b;
  h.m_ = m;
  return h;
}

std::uint64_t PairwiseHash::raw(std::uint64_t x) const { return field::add(field::mul(a_, x % field::kPrime), b_); }

PairwiseHash sample_hash(std::uint64_t seed, std::uint64_t universe, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("hash range must be at least 1");
  if (universe >= field::kPrime) throw std::invalid_argument("universe too large for p = 2^61 - 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_a(1, field::kPrime - 1);
  std::uniform_int_distribution<std::uint64_t> pick_b(0, field::kPrime - 1);
  const std::uint64_t a = pick_a(rng);
  const std::uint64_t b = pick_b(rng);
  return PairwiseHash::with_coefficients(a, b, m);
}

std::size_t ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return static_cast<std::size_t>(std::bit_width(x - 1));
}

// --- L0Sampler ----------------------------------------------------------------

std::size_t L0Sampler::levels_for(std::uint64_t universe) {
  if (universe <= 1) return 0;
  // ceil(2 log2 u) = ceil(log2 u^2) = bit width of u^2 - 1.
  unsigned __int128 sq = static_cast<unsigned __int128>(universe) * universe - 1;
  std::size_t bits = 0;
  while (sq != 0) {
    ++bits;
    sq >>= 1U;
  }
  return bits;
}

std::size_t L0Sampler::repetitions_for(std::uint64_t universe) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::bit_width(universe - 1)));
}

L0Sampler::L0Sampler(std::uint64_t universe, std::uint64_t seed)
    : universe_(universe), levels_(levels_for(universe)), reps_(repetitions_for(universe)) {
  if (universe == 0 || universe >= field::kPrime) throw std::invalid_argument("bad sampler universe");
  std::mt19937_64 rng(mix_seed(seed, 1));
  std::uniform_int_distribution<std::uint64_t> pick_z(2, field::kPrime - 1);
  for (std::size_t r = 0; r < reps_; ++r) {
    level_hash_.push_back(sample_hash(mix_seed(seed, 2 * r + 2), universe, 1));
    z_.push_back(pick_z(rng));
  }
}

std::size_t L0Sampler::level_of(std::uint64_t item, std::size_t r) const {
  const std::uint64_t h = level_hash_.at(r).raw(item);
  const std::size_t zeros = 61 - static_cast<std::size_t>(std::bit_width(h));
  return std::min(zeros, levels_);
}

void L0Sampler::update(std::uint64_t item, int delta) {
  if (item >= universe_) throw std::out_of_range("sampler item outside universe");
  if (delta != 1 && delta != -1) throw std::invalid_argument("sampler delta must be +1 or -1");
  if (cells_.empty()) cells_.resize(reps_ * (levels_ + 1));
  for (std::size_t r = 0; r < reps_; ++r) {
    const std::size_t top = level_of(item, r);
    const std::uint64_t fp = field::pow(z_[r], item);
    SparseCell* row = cells_.data() + r * (levels_ + 1);
    for (std::size_t j = 0; j <= top; ++j) {
      SparseCell& c = row[j];
      c.count += delta;
      c.id_sum += delta * static_cast<std::int64_t>(item);
      c.check_sum = delta > 0 ? field::add(c.check_sum, fp) : field::sub(c.check_sum, fp);
    }
  }
}

std::optional<std::uint64_t> L0Sampler::query_rep(std::size_t r) const {
  const SparseCell* row = cells_.data() + r * (levels_ + 1);
  for (std::size_t j = levels_ + 1; j-- > 0;) {
    const SparseCell& c = row[j];
    if (c.count == 0 || c.id_sum % c.count != 0) continue;
    const std::int64_t candidate = c.id_sum / c.count;
    if (candidate < 0 || static_cast<std::uint64_t>(candidate) >= universe_) continue;
    const auto x = static_cast<std::uint64_t>(candidate);
    if (level_of(x, r) < j) continue;
    const std::uint64_t count_mod =
        c.count > 0 ? static_cast<std::uint64_t>(c.count) % field::kPrime
                    : field::sub(0, static_cast<std::uint64_t>(-c.count) % field::kPrime);
    if (field::mul(count_mod, field::pow(z_[r], x)) != c.check_sum) continue;
    return x;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> L0Sampler::query() const {
  if (cells_.empty()) return std::nullopt;
  for (std::size_t r = 0; r < reps_; ++r) {
    if (auto x = query_rep(r)) return x;
  }
  return std::nullopt;
}

bool L0Sampler::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const SparseCell& c) { return c.is_zero(); });
}

bool operator==(const L0Sampler& a, const L0Sampler& b) {
  if (a.universe_ != b.universe_ || a.levels_ != b.levels_ || a.reps_ != b.reps_ || a.z_ != b.z_) return false;
  for (std::size_t r = 0; r < a.reps_; ++r) {
    if (a.level_hash_[r].a() != b.level_hash_[r].a() || a.level_hash_[r].b() != b.level_hash_[r].b()) return false;
  }
  if (a.cells_.empty() || b.cells_.empty()) return a.is_zero() && b.is_zero();
  return a.cells_ == b.cells_;
}

// --- ExactSampler -------------------------------------------------------------

void ExactSampler::update(std::uint64_t item, int delta) {
  if (item >= universe_) throw std::out_of_range("sampler item outside universe");
  auto& c = counts_[item];
  c += delta;
  if (c == 0) counts_.erase(item);
}

std::optional<std::uint64_t> ExactSampler::query() const {
  if (counts_.empty()) return std::nullopt;
  std::mt19937_64 rng(seed_);
  std::uniform_int_distribution<std::size_t> pick(0, counts_.size() - 1);
  return std::next(counts_.begin(), static_cast<std::ptrdiff_t>(pick(rng)))->first;
}

std::int64_t ExactSampler::total_count() const {
  std::int64_t total = 0;
  for (const auto& [item, c] : counts_) total += c;
  return total;
}

std::vector<std::uint64_t> ExactSampler::live_items() const {
  std::vector<std::uint64_t> out;
  for (const auto& [item, c] : counts_) out.push_back(item);
  return out;
}

// --- grid -------------------------------------------------------------------

std::size_t GridConfig::hash_count() const { return std::max<std::size_t>(1, alpha * ceil_log2(n)); }

std::size_t GridConfig::label_count() const { return std::max<std::size_t>(1, beta * K); }

std::size_t GridConfig::cells_per_hash() const {
  const std::size_t m = label_count();
  return m * (m + 1) / 2;
}

std::uint64_t GridConfig::edge_universe() const {
  const auto nn = static_cast<std::uint64_t>(std::max<std::size_t>(n, 1));
  return nn * nn;
}

SpaceRecord grid_space(const GridConfig& cfg) {
  SpaceRecord r;
  r.hashes = cfg.hash_count();
  r.cells = cfg.total_cells();
  r.words_per_cell = L0Sampler::words_for(cfg.edge_universe());
  r.total_words = r.hashes * PairwiseHash::words() + r.cells * r.words_per_cell;
  return r;
}

template <class Sampler>
BasicSamplerGrid<Sampler>::BasicSamplerGrid(const GridConfig& cfg) : cfg_(cfg) {
  if (cfg.alpha == 0 || cfg.beta == 0) throw std::invalid_argument("alpha and beta must be at least 1");
  const std::size_t count = cfg.hash_count();
  hashes_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    hashes_.push_back(sample_hash(mix_seed(cfg.seed, 2 * i), std::max<std::size_t>(cfg.n, 1), cfg.label_count()));
  }
}

template <class Sampler>
std::size_t BasicSamplerGrid<Sampler>::cell_index(std::uint64_t r, std::uint64_t s) const {
  if (r > s) std::swap(r, s);
  const std::uint64_t m = cfg_.label_count();
  if (r < 1 || s > m) throw std::out_of_range("label outside 1..beta*K");
  // Row-major upper triangle over 0-based labels.
  const std::uint64_t r0 = r - 1;
  const std::uint64_t s0 = s - 1;
  return static_cast<std::size_t>(r0 * m - r0 * (r0 - 1) / 2 + (s0 - r0));
}

template <class Sampler>
std::uint64_t BasicSamplerGrid<Sampler>::encode(Vertex u, Vertex v) const {
  const Edge e(u, v);
  return static_cast<std::uint64_t>(e.u) * cfg_.n + e.v;
}

template <class Sampler>
Edge BasicSamplerGrid<Sampler>::decode(std::uint64_t item) const {
  return Edge(static_cast<Vertex>(item / cfg_.n), static_cast<Vertex>(item % cfg_.n));
}

template <class Sampler>
void BasicSamplerGrid<Sampler>::feed(Vertex u, Vertex v, int delta) {
  if (u == v) throw std::invalid_argument("grid_feed: self-loop");
  if (u >= cfg_.n || v >= cfg_.n) throw std::out_of_range("grid_feed: vertex out of range");
  const std::uint64_t item = encode(u, v);
  const std::size_t per_hash = cfg_.cells_per_hash();
  for (std::size_t i = 0; i < hashes_.size(); ++i) {
    const std::size_t key = i * per_hash + cell_index(hashes_[i](u), hashes_[i](v));
    auto it = cells_.find(key);
    if (it == cells_.end()) {
      it = cells_.emplace(key, Sampler(cfg_.edge_universe(), mix_seed(cfg_.seed, 2 * key + 1))).first;
    }
    it->second.update(item, delta);
  }
}

template <class Sampler>
const Sampler* BasicSamplerGrid<Sampler>::cell(std::size_t hash_index, std::uint64_t r, std::uint64_t s) const {
  const std::size_t key = hash_index * cfg_.cells_per_hash() + cell_index(r, s);
  auto it = cells_.find(key);
  return it == cells_.end() ? nullptr : &it->second;
}

template <class Sampler>
Graph BasicSamplerGrid<Sampler>::extract() const {
  Graph h(cfg_.n);
  failures_ = 0;
  for (const auto& [key, sampler] : cells_) {
    if (auto item = sampler.query()) {
      const Edge e = decode(*item);
      h.add_edge(e.u, e.v);
    } else if (sampler.total_count() != 0) {
      ++failures_;
    }
  }
  return h;
}

template <class Sampler>
std::size_t BasicSamplerGrid<Sampler>::space_words() const {
  return hashes_.size() * PairwiseHash::words() +
         cfg_.total_cells() * Sampler::words_for(cfg_.edge_universe());
}

template <class Sampler>
std::size_t BasicSamplerGrid<Sampler>::materialized_words() const {
  std::size_t words = hashes_.size() * PairwiseHash::words();
  for (const auto& [key, sampler] : cells_) words += sampler.materialized_words();
  return words;
}

template class BasicSamplerGrid<L0Sampler>;
template class BasicSamplerGrid<ExactSampler>;

}  // namespace gsf
