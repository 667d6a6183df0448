#include "gsf/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "gsf/graph.hpp"

namespace gsf {

void PermInstance::check() const {
  if (n < 2 || !std::has_single_bit(n)) throw std::invalid_argument("perm instance needs n a power of two, n >= 2");
  if (pi.size() != n) throw std::invalid_argument("permutation length differs from n");
  std::vector<std::size_t> sorted = pi;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != i + 1) throw std::invalid_argument("pi is not a permutation of 1..n");
  }
  if (j < 1 || j > n * log_n()) throw std::invalid_argument("j outside 1..n log n");
}

std::size_t PermInstance::log_n() const { return static_cast<std::size_t>(std::countr_zero(n)); }

std::pair<std::size_t, std::size_t> PermInstance::phi() const {
  const std::size_t lg = log_n();
  const std::size_t psi = (j + lg - 1) / lg;
  return {psi, j + lg - psi * lg};
}

void DisjInstance::check() const {
  if (x.size() != n || y.size() != n) throw std::invalid_argument("disj vectors must have length n");
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] > 1 || y[i] > 1) throw std::invalid_argument("disj entries must be bits");
  }
}

DisjInstance DisjInstance::from_strings(std::string_view x, std::string_view y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  DisjInstance d;
  d.n = x.size();
  for (char c : x) d.x.push_back(static_cast<std::uint8_t>(c - '0'));
  for (char c : y) d.y.push_back(static_cast<std::uint8_t>(c - '0'));
  d.check();
  return d;
}

int bit(std::size_t i, std::size_t r, std::size_t n) {
  const auto lg = static_cast<std::size_t>(std::countr_zero(n));
  if (r < 1 || r > lg) throw std::out_of_range("bit position outside 1..log n");
  const std::size_t value = i == n ? 0 : i;
  return static_cast<int>((value >> (lg - r)) & 1U);
}

int perm_value(const PermInstance& inst) {
  inst.check();
  const auto [psi, gamma] = inst.phi();
  return bit(inst.pi[psi - 1], gamma, inst.n);
}

int disj_value(const DisjInstance& inst) {
  inst.check();
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (inst.x[i] && inst.y[i]) return 0;
  }
  return 1;
}

namespace {

using Exposures = std::vector<VertexExpose>;

Stream vertex_stream(StreamModel model, std::size_t n, Exposures ex) {
  Stream s{model, n, {}};
  for (auto& e : ex) s.events.emplace_back(std::move(e));
  require_valid(s);
  return s;
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& pi) {
  std::vector<std::size_t> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i] - 1] = i + 1;
  return inv;
}

}  // namespace

Stream gen_perm_fvs(const PermInstance& inst) {
  inst.check();
  const std::size_t n = inst.n;
  const auto [psi, gamma] = inst.phi();
  const auto inv = inverse(inst.pi);
  auto u = [&](std::size_t i) { return static_cast<Vertex>(i - 1); };
  auto v = [&](std::size_t i) { return static_cast<Vertex>(n + i - 1); };
  auto u2 = [&](std::size_t i) { return static_cast<Vertex>(2 * n + i - 1); };
  auto v2 = [&](std::size_t i) { return static_cast<Vertex>(3 * n + i - 1); };
  const auto w = static_cast<Vertex>(4 * n);
  const auto w2 = static_cast<Vertex>(4 * n + 1);
  Exposures ex;
  for (std::size_t i = 1; i <= n; ++i) ex.push_back({u(i), {u2(i), v(inst.pi[i - 1])}});
  for (std::size_t i = 1; i <= n; ++i) ex.push_back({v(i), {v2(i), u(inv[i - 1])}});
  for (std::size_t i = 1; i <= n; ++i) {
    VertexExpose e{u2(i), {u(i)}};
    if (i == psi) e.neighbors.push_back(w2);
    ex.push_back(std::move(e));
  }
  VertexExpose at_w{w, {w2}};
  for (std::size_t i = 1; i <= n; ++i) {
    VertexExpose e{v2(i), {v(i)}};
    if (bit(i, gamma, n)) {
      e.neighbors.push_back(w);
      at_w.neighbors.push_back(v2(i));
    }
    ex.push_back(std::move(e));
  }
  ex.push_back(std::move(at_w));
  ex.push_back({w2, {w, u2(psi)}});
  return vertex_stream(StreamModel::AL, 4 * n + 2, std::move(ex));
}

Stream gen_disj_fvs(const DisjInstance& inst) {
  inst.check();
  auto u = [](std::size_t i, std::size_t c) { return static_cast<Vertex>(4 * (i - 1) + c - 1); };
  Exposures ex;
  for (std::size_t i = 1; i <= inst.n; ++i) {
    VertexExpose a{u(i, 1), {u(i, 3)}};
    VertexExpose b{u(i, 2), {u(i, 4)}};
    if (inst.x[i - 1]) {
      a.neighbors.push_back(u(i, 2));
      b.neighbors.push_back(u(i, 1));
    }
    ex.push_back(std::move(a));
    ex.push_back(std::move(b));
  }
  for (std::size_t i = 1; i <= inst.n; ++i) {
    VertexExpose a{u(i, 3), {u(i, 1)}};
    VertexExpose b{u(i, 4), {u(i, 2)}};
    if (inst.y[i - 1]) {
      a.neighbors.push_back(u(i, 4));
      b.neighbors.push_back(u(i, 3));
    }
    ex.push_back(std::move(a));
    ex.push_back(std::move(b));
  }
  return vertex_stream(StreamModel::AL, 4 * inst.n, std::move(ex));
}

Stream gen_disj_fvs_vc(const DisjInstance& inst) {
  inst.check();
  const std::size_t n = inst.n;
  const Vertex ua = 0;
  const auto ub = static_cast<Vertex>(n + 1);
  const auto w = static_cast<Vertex>(n + 2);
  Exposures ex;
  ex.push_back({ua, {}});
  VertexExpose at_b{ub, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    VertexExpose e{static_cast<Vertex>(i), {}};
    if (inst.x[i - 1]) e.neighbors.push_back(ua);
    ex.push_back(std::move(e));
    if (inst.y[i - 1]) at_b.neighbors.push_back(static_cast<Vertex>(i));
  }
  ex.push_back(std::move(at_b));
  ex.push_back({w, {ua, ub}});
  return vertex_stream(StreamModel::VA, n + 3, std::move(ex));
}

Stream gen_perm_td(const PermInstance& inst) {
  inst.check();
  const std::size_t n = inst.n;
  const auto [psi, gamma] = inst.phi();
  const auto inv = inverse(inst.pi);
  Exposures ex;
  for (std::size_t i = 1; i <= n; ++i) ex.push_back({static_cast<Vertex>(i - 1), {}});
  // The edge set is {(u_i, v_pi(i))}; each is revealed when its v end appears.
  for (std::size_t i = 1; i <= n; ++i) {
    ex.push_back({static_cast<Vertex>(n + i - 1), {static_cast<Vertex>(inv[i - 1] - 1)}});
  }
  VertexExpose at_w{static_cast<Vertex>(2 * n), {static_cast<Vertex>(psi - 1)}};
  for (std::size_t i = 1; i <= n; ++i) {
    if (bit(i, gamma, n)) at_w.neighbors.push_back(static_cast<Vertex>(n + i - 1));
  }
  ex.push_back(std::move(at_w));
  return vertex_stream(StreamModel::VA, 2 * n + 1, std::move(ex));
}

Stream gen_disj_td(const DisjInstance& inst) {
  inst.check();
  auto u = [](std::size_t i, std::size_t c) { return static_cast<Vertex>(3 * (i - 1) + c - 1); };
  Exposures ex;
  for (std::size_t i = 1; i <= inst.n; ++i) {
    ex.push_back({u(i, 1), {}});
    VertexExpose e{u(i, 2), {}};
    if (inst.x[i - 1]) e.neighbors.push_back(u(i, 1));
    ex.push_back(std::move(e));
  }
  for (std::size_t i = 1; i <= inst.n; ++i) {
    VertexExpose e{u(i, 3), {}};
    if (inst.y[i - 1]) e.neighbors = {u(i, 1), u(i, 2)};
    ex.push_back(std::move(e));
  }
  return vertex_stream(StreamModel::VA, 3 * inst.n, std::move(ex));
}

Stream gen_disj_td_vc(const DisjInstance& inst) {
  inst.check();
  const std::size_t n = inst.n;
  const Vertex ua = 0;
  const auto ub = static_cast<Vertex>(n + 1);
  Exposures ex;
  ex.push_back({ua, {}});
  VertexExpose at_b{ub, {ua}};
  for (std::size_t i = 1; i <= n; ++i) {
    VertexExpose e{static_cast<Vertex>(i), {}};
    if (inst.x[i - 1]) e.neighbors.push_back(ua);
    ex.push_back(std::move(e));
    if (inst.y[i - 1]) at_b.neighbors.push_back(static_cast<Vertex>(i));
  }
  ex.push_back(std::move(at_b));
  return vertex_stream(StreamModel::VA, n + 2, std::move(ex));
}

Stream gen_disj_cvd(const DisjInstance& inst) {
  inst.check();
  auto u = [](std::size_t i, std::size_t c) { return static_cast<Vertex>(3 * (i - 1) + c - 1); };
  Exposures ex;
  for (std::size_t i = 1; i <= inst.n; ++i) {
    ex.push_back({u(i, 1), {}});
    VertexExpose e{u(i, 2), {}};
    if (inst.x[i - 1]) e.neighbors.push_back(u(i, 1));
    ex.push_back(std::move(e));
  }
  for (std::size_t i = 1; i <= inst.n; ++i) {
    VertexExpose e{u(i, 3), {}};
    if (inst.y[i - 1]) e.neighbors.push_back(u(i, 2));
    ex.push_back(std::move(e));
  }
  return vertex_stream(StreamModel::VA, 3 * inst.n, std::move(ex));
}

ObstructionKind parse_obstruction(std::string_view s) {
  if (s == "C4" || s == "c4") return ObstructionKind::C4;
  if (s == "triangle" || s == "K3" || s == "k3") return ObstructionKind::Triangle;
  if (s == "P3" || s == "p3") return ObstructionKind::P3;
  throw std::invalid_argument("unknown obstruction '" + std::string(s) + "'");
}

Stream pad_with_disjoint_obstructions(const Stream& s, std::size_t k, ObstructionKind kind) {
  const Graph piece = kind == ObstructionKind::C4         ? make_cycle(4)
                      : kind == ObstructionKind::Triangle ? make_complete(3)
                                                          : make_path(3);
  Stream out = s;
  const std::size_t size = piece.num_vertices();
  for (std::size_t c = 0; c < k; ++c) {
    const auto base = static_cast<Vertex>(out.n);
    out.n += size;
    switch (s.model) {
      case StreamModel::EA:
        for (const Edge& e : piece.edges()) out.events.emplace_back(EdgeArrive{base + e.u, base + e.v});
        break;
      case StreamModel::DEA:
        for (const Edge& e : piece.edges()) out.events.emplace_back(EdgeInsert{base + e.u, base + e.v});
        break;
      case StreamModel::VA:
      case StreamModel::AL:
        for (Vertex v = 0; v < size; ++v) {
          VertexExpose ex{base + v, {}};
          for (Vertex w : piece.neighbors(v)) {
            if (s.model == StreamModel::AL || w < v) ex.neighbors.push_back(base + w);
          }
          out.events.emplace_back(std::move(ex));
        }
        break;
    }
  }
  return out;
}

}  // namespace gsf
