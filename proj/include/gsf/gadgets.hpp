#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "gsf/stream.hpp"

namespace gsf {

/// Perm_n input: permutation pi of 1..n (pi[i-1] = pi(i)), n a power of two,
/// and a bit index j in 1..n log2 n.
struct PermInstance {
  std::size_t n = 0;
  std::vector<std::size_t> pi;
  std::size_t j = 1;

  void check() const;
  std::size_t log_n() const;
  /// (psi, gamma): the bit sits at position gamma of pi(psi).
  std::pair<std::size_t, std::size_t> phi() const;
};

/// Disj_n input: bit vectors x, y of length n.
struct DisjInstance {
  std::size_t n = 0;
  std::vector<std::uint8_t> x, y;

  void check() const;
  static DisjInstance from_strings(std::string_view x, std::string_view y);
};

/// r-th bit (1 = most significant) of the log2(n)-bit expansion of i; the
/// value n itself is written as all zeros.
int bit(std::size_t i, std::size_t r, std::size_t n);
int perm_value(const PermInstance& inst);
/// 1 when x and y share no index with x_i = y_i = 1.
int disj_value(const DisjInstance& inst);

// Reduction graphs as streams. Vertex layouts (0-based):
//   perm-fvs    u_i = i-1, v_i = n+i-1, u'_i = 2n+i-1, v'_i = 3n+i-1, w = 4n, w' = 4n+1
//   disj-fvs    u_ic = 4(i-1)+c-1
//   disj-fvs-vc u_a = 0, v_i = i, u_b = n+1, w = n+2
//   perm-td     u_i = i-1, v_i = n+i-1, w = 2n
//   disj-td     u_ic = 3(i-1)+c-1
//   disj-td-vc  u_a = 0, v_i = i, u_b = n+1
//   disj-cvd    u_ic = 3(i-1)+c-1
Stream gen_perm_fvs(const PermInstance& inst);
Stream gen_disj_fvs(const DisjInstance& inst);
Stream gen_disj_fvs_vc(const DisjInstance& inst);
Stream gen_perm_td(const PermInstance& inst);
Stream gen_disj_td(const DisjInstance& inst);
Stream gen_disj_td_vc(const DisjInstance& inst);
Stream gen_disj_cvd(const DisjInstance& inst);

enum class ObstructionKind { C4, Triangle, P3 };
ObstructionKind parse_obstruction(std::string_view s);

/// Appends k vertex-disjoint copies of the obstruction on fresh vertices,
/// encoded in the stream's own model.
Stream pad_with_disjoint_obstructions(const Stream& s, std::size_t k, ObstructionKind kind);

}  // namespace gsf
