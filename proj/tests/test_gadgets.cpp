#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>

#include "gsf/gadgets.hpp"
#include "gsf/oracle.hpp"
#include "gsf/solvers.hpp"

using namespace gsf;

namespace {

// Concatenated log2(n)-bit expansions, n written as zeros.
std::string perm_string(const std::vector<std::size_t>& pi) {
  const std::size_t n = pi.size();
  std::size_t lg = 0;
  while ((std::size_t{1} << lg) < n) ++lg;
  std::string out;
  for (std::size_t v : pi) {
    std::string bits;
    for (std::size_t r = 0; r < lg; ++r) bits.insert(bits.begin(), (v % n) >> r & 1U ? '1' : '0');
    out += bits;
  }
  return out;
}

bool has_triangle(const Graph& g) { return find_forbidden_subgraph(g, FamilySpec::triangle()).has_value(); }

std::vector<DisjInstance> all_disj(std::size_t n) {
  std::vector<DisjInstance> out;
  for (std::uint32_t xm = 0; xm < (1U << n); ++xm) {
    for (std::uint32_t ym = 0; ym < (1U << n); ++ym) {
      DisjInstance d{n, {}, {}};
      for (std::size_t i = 0; i < n; ++i) {
        d.x.push_back(static_cast<std::uint8_t>(xm >> i & 1U));
        d.y.push_back(static_cast<std::uint8_t>(ym >> i & 1U));
      }
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("bit expansion and phi") {
  CHECK(bit(3, 1, 4) == 1);
  CHECK(bit(3, 2, 4) == 1);
  CHECK(bit(2, 2, 4) == 0);
  CHECK(bit(4, 1, 4) == 0);
  CHECK(bit(4, 2, 4) == 0);
  CHECK_THROWS(bit(1, 3, 4));
  PermInstance p{4, {3, 4, 2, 1}, 5};
  CHECK(p.phi() == std::pair<std::size_t, std::size_t>{3, 1});
  p.j = 4;
  CHECK(p.phi() == std::pair<std::size_t, std::size_t>{2, 2});
}

TEST_CASE("perm values from the worked example") {
  CHECK(perm_string({3, 4, 2, 1}) == "11001001");
  CHECK(perm_value(PermInstance{4, {3, 4, 2, 1}, 5}) == 1);
  CHECK(perm_value(PermInstance{4, {3, 4, 2, 1}, 4}) == 0);
  const std::string id = perm_string({1, 2, 3, 4});
  CHECK(id == "01101100");
  for (std::size_t j = 1; j <= 8; ++j) CHECK(perm_value(PermInstance{4, {1, 2, 3, 4}, j}) == id[j - 1] - '0');
}

TEST_CASE("instances are checked") {
  CHECK_THROWS(PermInstance({3, {1, 2, 3}, 1}).check());
  CHECK_THROWS(PermInstance({4, {1, 2, 2, 4}, 1}).check());
  CHECK_THROWS(PermInstance({4, {1, 2, 3, 4}, 9}).check());
  CHECK_THROWS(DisjInstance::from_strings("0112", "0110"));
  CHECK_THROWS(DisjInstance::from_strings("01", "011"));
  CHECK(disj_value(DisjInstance::from_strings("1001", "0100")) == 1);
  CHECK(disj_value(DisjInstance::from_strings("1100", "0110")) == 0);
}

TEST_CASE("caption instances") {
  const PermInstance p5{4, {3, 4, 2, 1}, 5}, p4{4, {3, 4, 2, 1}, 4};
  CHECK(has_cycle(replay(gen_perm_fvs(p5))));
  CHECK_FALSE(has_cycle(replay(gen_perm_fvs(p4))));
  CHECK(has_triangle(replay(gen_perm_td(p5))));
  CHECK_FALSE(has_triangle(replay(gen_perm_td(p4))));

  auto d = DisjInstance::from_strings;
  CHECK_FALSE(has_cycle(replay(gen_disj_fvs(d("1001", "0100")))));
  const Graph c4 = replay(gen_disj_fvs(d("1100", "0110")));
  const auto cyc = find_forbidden_subgraph(c4, FamilySpec::all_cycles());
  REQUIRE(cyc);
  CHECK(*cyc == VertexSet{4, 5, 6, 7});  // index 2

  CHECK_FALSE(has_cycle(replay(gen_disj_fvs_vc(d("1000", "0101")))));
  CHECK(has_cycle(replay(gen_disj_fvs_vc(d("0011", "1010")))));

  CHECK_FALSE(has_triangle(replay(gen_disj_td(d("1001", "0100")))));
  CHECK(has_triangle(replay(gen_disj_td(d("0110", "1010")))));
  CHECK_FALSE(has_triangle(replay(gen_disj_td_vc(d("1000", "0101")))));
  CHECK(has_triangle(replay(gen_disj_td_vc(d("0011", "1010")))));

  CHECK(is_cluster_graph(replay(gen_disj_cvd(d("0101", "1000")))));
  CHECK(find_induced_p3(replay(gen_disj_cvd(d("1100", "0110")))));
}

TEST_CASE("perm gadgets: obstruction iff the bit is 1") {
  std::vector<std::size_t> pi{1, 2, 3, 4};
  do {
    for (std::size_t j = 1; j <= 8; ++j) {
      const PermInstance inst{4, pi, j};
      const int want = perm_string(pi)[j - 1] - '0';
      REQUIRE(perm_value(inst) == want);
      const Stream fvs = gen_perm_fvs(inst);
      REQUIRE(fvs.model == StreamModel::AL);
      const Graph g = replay(fvs);
      REQUIRE(has_cycle(g) == (want == 1));
      // every cycle is even: the graph is bipartite
      REQUIRE(satisfies(g, Property::subgraph_free(FamilySpec::odd_cycles())));
      const Stream td = gen_perm_td(inst);
      REQUIRE(td.model == StreamModel::VA);
      REQUIRE(has_triangle(replay(td)) == (want == 1));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
}

TEST_CASE("disj gadgets: obstruction iff the sets meet") {
  for (std::size_t n : {2, 3}) {
    for (const DisjInstance& inst : all_disj(n)) {
      const bool meet = disj_value(inst) == 0;
      const Graph fvs = replay(gen_disj_fvs(inst));
      REQUIRE(has_cycle(fvs) == meet);
      REQUIRE(fvs.max_degree() <= 4);
      const Graph fvs_vc = replay(gen_disj_fvs_vc(inst));
      REQUIRE(has_cycle(fvs_vc) == meet);
      REQUIRE(*exact_min_vc(fvs_vc, n + 3) <= 2);
      REQUIRE(has_triangle(replay(gen_disj_td(inst))) == meet);
      const Graph td_vc = replay(gen_disj_td_vc(inst));
      REQUIRE(has_triangle(td_vc) == meet);
      REQUIRE(*exact_min_vc(td_vc, n + 2) <= 2);
      const Graph cvd = replay(gen_disj_cvd(inst));
      REQUIRE(find_induced_p3(cvd).has_value() == meet);
      REQUIRE(cvd.max_degree() <= 2);
    }
  }
}

TEST_CASE("padding") {
  const PermInstance acyclic{4, {3, 4, 2, 1}, 4}, cyclic{4, {3, 4, 2, 1}, 5};
  const Stream s = gen_perm_fvs(acyclic);
  CHECK(pad_with_disjoint_obstructions(s, 0, ObstructionKind::C4) == s);
  const FamilySpec fvs = FamilySpec::all_cycles();
  const Stream two = pad_with_disjoint_obstructions(s, 2, ObstructionKind::C4);
  CHECK_FALSE(validate(two));
  const Graph g2 = replay(two);
  CHECK(g2.num_vertices() == s.n + 8);
  CHECK_FALSE(solve_subgraph_deletion(g2, fvs, 1).yes);
  CHECK(solve_subgraph_deletion(g2, fvs, 2).yes);
  const Graph g1 = replay(pad_with_disjoint_obstructions(gen_perm_fvs(cyclic), 1, ObstructionKind::C4));
  CHECK_FALSE(solve_subgraph_deletion(g1, fvs, 1).yes);
  CHECK(solve_subgraph_deletion(g1, fvs, 2).yes);

  const auto inst = DisjInstance::from_strings("10", "01");
  for (ObstructionKind kind : {ObstructionKind::C4, ObstructionKind::Triangle, ObstructionKind::P3}) {
    const Stream va = pad_with_disjoint_obstructions(gen_disj_cvd(inst), 3, kind);
    CHECK_FALSE(validate(va));
  }
  CHECK_FALSE(solve_cvd(replay(pad_with_disjoint_obstructions(gen_disj_cvd(inst), 3, ObstructionKind::P3)), 2).yes);
  CHECK(parse_obstruction("triangle") == ObstructionKind::Triangle);
  CHECK_THROWS(parse_obstruction("k5"));
}
