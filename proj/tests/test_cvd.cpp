#include <doctest.h>

#include <random>

#include "gsf/cvd_stream.hpp"
#include "gsf/oracle.hpp"
#include "gsf/random_graphs.hpp"

using namespace gsf;

namespace {

CvdReport cvd_on(const Graph& g, std::size_t K, std::size_t k, std::uint64_t seed) {
  const Stream s = dea_with_deletions(g, 3, seed);
  return run_cvd(s, CvdParams{g.num_vertices(), K, k, 16, 10, seed, false});
}

}  // namespace

TEST_CASE("params are checked") {
  CHECK_THROWS_AS(CvdParams({4, 2, 3}).check(), std::invalid_argument);
  CHECK_THROWS_AS(CvdParams({4, 5, 1}).check(), std::invalid_argument);
  CvdParams p{4, 2, 1};
  p.alpha = 0;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  CHECK_NOTHROW(CvdParams({4, 2, 1}).check());
}

TEST_CASE("empty graph") {
  const Stream s{StreamModel::DEA, 5, {}};
  const CvdReport r = run_cvd(s, CvdParams{5, 1, 0});
  CHECK(r.yes);
  CHECK(r.solution.empty());
  CHECK(r.sketch_edges == 0);
}

TEST_CASE("two disjoint triangles") {
  const Graph g = disjoint_union(make_complete(3), make_complete(3));
  const CvdReport r = cvd_on(g, 4, 0, 2);
  CHECK(r.yes);
  CHECK(r.solution.empty());
}

TEST_CASE("P3 among isolated vertices") {
  Graph g(8);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CvdReport r = cvd_on(g, 2, 1, seed);
    REQUIRE(r.yes);
    REQUIRE(r.solution.size() == 1);
    CHECK(is_cluster_graph(delete_vertices(g, r.solution)));
  }
}

TEST_CASE("two disjoint P3s need two deletions") {
  const Graph g = disjoint_union(make_path(3), make_path(3));
  CHECK_FALSE(oracle_decide(g, 1, Property::cluster()).yes);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK_FALSE(cvd_on(g, 2, 1, seed).yes);
  CHECK(cvd_on(g, 2, 2, 0).yes);
}

TEST_CASE("malformed stream is rejected") {
  const Stream bad{StreamModel::DEA, 3, {EdgeDelete{0, 1}}};
  CHECK_THROWS_AS(run_cvd(bad, CvdParams{3, 1, 0}), MalformedStream);
  const Stream al{StreamModel::AL, 2, {VertexExpose{0, {1}}, VertexExpose{1, {0}}}};
  CHECK_THROWS(run_cvd(al, CvdParams{2, 1, 0}));
}

TEST_CASE("space report") {
  const CvdParams small{2, 1, 0, 1, 1};
  CHECK(cvd_space_report(small) == 38);
  const CvdParams big{1024, 8, 0};
  CHECK(cvd_space_report(big) == grid_space(big.grid()).total_words);
  // Cell counts grow by about 4 per doubling of K.
  double prev = 0;
  for (std::size_t K = 4; K <= 64; K *= 2) {
    const double cells = static_cast<double>(CvdParams{1024, K, 0}.grid().total_cells());
    if (prev > 0) CHECK(cells / prev == doctest::Approx(4.0).epsilon(0.05));
    prev = cells;
  }
  // The logical space is what a run reports, independent of the edges seen.
  const Graph g = random_cover_graph(1024, 8, 0.01, 3);
  const CvdReport r = run_cvd(graph_to_stream(g, StreamModel::EA, 1), big);
  CHECK(r.space_words == cvd_space_report(big));
  CHECK(r.materialized_words <= r.space_words);
}

TEST_CASE("deterministic given the seed") {
  const Graph g = planted_cluster_graph(18, 4, 2, 0.3, 7);
  const Stream s = dea_with_deletions(g, 6, 8);
  const CvdParams p{18, 6, 2, 16, 10, 42};
  const CvdReport a = run_cvd(s, p);
  const CvdReport b = run_cvd(s, p);
  CHECK(a.yes == b.yes);
  CHECK(a.solution == b.solution);
  CHECK(a.sketch == b.sketch);
  CHECK(a.space_words == b.space_words);
  CHECK(a.materialized_words == b.materialized_words);
}

TEST_CASE("sketch is a subgraph of the final graph") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_cover_graph(20, 3, 0.4, rng());
    const CvdReport r = run_cvd(dea_with_deletions(g, 10, rng()), CvdParams{20, 3, 1, 4, 4, rng()});
    for (const Edge& e : r.sketch.edges()) REQUIRE(g.has_edge(e.u, e.v));
  }
}

TEST_CASE("exact samplers recover the whole graph at moderate beta") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = planted_cluster_graph(16, 3, 1, 0.4, rng());
    const auto vc = exact_min_vc(g, 16);
    const CvdParams p{16, *vc, 0, 16, 10, rng(), true};
    const CvdReport r = run_cvd(dea_with_deletions(g, 4, rng()), p);
    CHECK(r.extraction_failures == 0);
    // H == G forces the same answer as the offline solver on G.
    if (r.sketch == g) {
      for (std::size_t k = 0; k <= 2 && k <= *vc; ++k) {
        CvdParams q = p;
        q.k = k;
        REQUIRE(run_cvd(dea_with_deletions(g, 4, 1), q).yes == solve_cvd(g, k).yes);
      }
    }
  }
}
