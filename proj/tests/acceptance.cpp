// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "gsf/common_neighbor.hpp"
#include "gsf/cvd_stream.hpp"
#include "gsf/gadgets.hpp"
#include "gsf/oracle.hpp"
#include "gsf/pipeline.hpp"
#include "gsf/random_graphs.hpp"
#include "gsf/sketch.hpp"
#include "gsf/solvers.hpp"
#include "support.hpp"

using namespace gsf;

namespace {

// Tolerances.
constexpr std::size_t kMaxCnFailures = 0;
constexpr std::size_t kMaxPipelineMismatches = 0;
constexpr double kCvdWitnessRate = 0.95;
constexpr double kCvdRecallRate = 0.90;
constexpr double kSamplerFalseRate = 1e-4;
constexpr double kUniformSlack = 0.30;
constexpr double kCvdExponentLimit = 2.3;
constexpr double kCnFlatSlack = 1.10;  // max/min edges over m
constexpr std::size_t kMaxGadgetFailures = 0;
constexpr std::size_t kMaxSolverMismatches = 0;

using Clock = std::chrono::steady_clock;

bool all_pass = true;

void report(int id, const char* name, bool pass, const std::string& detail, Clock::time_point start) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("criterion %d %-28s %s  %s  (%.1fs)\n", id, name, pass ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  all_pass = all_pass && pass;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------

void criterion_cn_equivalence() {
  const auto start = Clock::now();
  std::vector<Graph> catalog = test::lemma_catalog();
  catalog.push_back(make_paw());
  std::size_t instances = 0, failures = 0;
  auto check = [&](const Graph& g, std::uint64_t seed) {
    const std::size_t vc = *exact_min_vc(g, g.num_vertices());
    for (std::size_t d = 2; d <= 3; ++d) {
      const std::size_t K = std::max(vc, d);
      ++instances;
      if (oracle_cn_equivalence(g, structural_config(K, d), catalog, seed + d)) ++failures;
    }
  };
  std::size_t exhaustive = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : test::connected_graphs_up_to_iso(n)) {
      check(g, n * 1000 + exhaustive++);
    }
  }
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 8 + rng() % 7;
    const std::size_t cover = 1 + rng() % 4;
    check(random_cover_graph(n, cover, 0.5, rng()), rng());
  }
  report(1, "common-neighbor-equivalence", failures <= kMaxCnFailures,
         std::to_string(failures) + " failures over " + std::to_string(instances) + " (graph, d) instances", start);
}

// ---------------------------------------------------------------------------

void criterion_pipelines() {
  const auto start = Clock::now();
  struct Case {
    const char* name;
    FamilySpec fam;
    Containment mode;
    Property prop;
  };
  const FamilySpec k3 = FamilySpec::explicit_list({make_complete(3)});
  const std::vector<Case> cases{
      {"fvs", FamilySpec::all_cycles(), Containment::Subgraph, Property::subgraph_free(FamilySpec::all_cycles())},
      {"ect", FamilySpec::even_cycles(), Containment::Subgraph, Property::subgraph_free(FamilySpec::even_cycles())},
      {"oct", FamilySpec::odd_cycles(), Containment::Subgraph, Property::subgraph_free(FamilySpec::odd_cycles())},
      {"td", FamilySpec::triangle(), Containment::Subgraph, Property::subgraph_free(FamilySpec::triangle())},
      {"minor-k3", k3, Containment::Minor, Property::minor_free(k3)},
  };
  std::mt19937_64 rng(77);
  std::size_t runs = 0, mismatches = 0, yes = 0;
  std::string first_bad;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 5 + rng() % 10;
    const std::size_t K = 1 + rng() % 4;
    const Graph g = random_cover_graph(n, K, 0.5, rng());
    const std::size_t k = rng() % (std::min<std::size_t>(3, K) + 1);
    const Stream al = test::random_al(g, rng());
    for (const Case& c : cases) {
      const bool got = run_deletion_pipeline(al, c.fam, c.mode, K, k).solution.yes;
      const bool want = oracle_decide(g, k, c.prop).yes;
      ++runs;
      yes += want ? 1 : 0;
      if (got != want) {
        ++mismatches;
        if (first_bad.empty()) first_bad = std::string(" first: ") + c.name + " trial " + std::to_string(t);
      }
    }
  }
  report(2, "deletion-pipelines", mismatches <= kMaxPipelineMismatches,
         std::to_string(mismatches) + " mismatches over " + std::to_string(runs) + " runs (" + std::to_string(yes) +
             " YES)" + first_bad,
         start);
}

// ---------------------------------------------------------------------------

// Cliques whose cover numbers add up to `cluster_vc`, isolated vertices, and
// `noise` vertices wired at random. VC <= cluster_vc + noise.
Graph planted_instance(std::size_t n, std::size_t cluster_vc, std::size_t noise, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph g(n);
  std::size_t pos = noise, budget = cluster_vc;
  while (budget > 0 && pos + 2 <= n) {
    const std::size_t s = 2 + rng() % budget;  // clique of size s costs s - 1
    const std::size_t size = std::min(s, n - pos);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) g.add_edge(perm[pos + i], perm[pos + j]);
    }
    pos += size;
    budget -= size - 1;
  }
  std::bernoulli_distribution coin(3.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < noise; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && coin(rng)) g.add_edge(perm[i], perm[j]);
    }
  }
  return g;
}

void criterion_cvd() {
  const auto start = Clock::now();
  std::mt19937_64 rng(31337);
  std::size_t said_yes = 0, valid_yes = 0, truth_yes = 0, recalled = 0, exact_h = 0, exact_h_agree = 0;
  for (int t = 0; t < 200; ++t) {
    Graph g;
    std::size_t K = 0;
    std::size_t noise = 0;
    while (true) {
      const std::size_t n = 10 + rng() % 15;
      K = 1 + rng() % 4;
      noise = rng() % (std::min<std::size_t>(2, K) + 1);
      g = planted_instance(n, K - noise, noise, rng);
      if (exact_min_vc(g, K)) break;
    }
    const std::size_t k = rng() % (std::min<std::size_t>(2, K) + 1);
    const Stream s = dea_with_deletions(g, g.num_vertices(), rng());
    const CvdReport r = run_cvd(s, CvdParams{g.num_vertices(), K, k, 16, 10, rng(), false});
    // Ground truth: exhaustive when small, the offline solver on G otherwise.
    const bool truth = g.num_vertices() <= kOracleMaxVertices ? oracle_decide(g, k, Property::cluster()).yes
                                                              : solve_cvd(g, k).yes;
    if (r.yes) {
      ++said_yes;
      if (r.solution.size() <= k && satisfies(delete_vertices(g, r.solution), Property::cluster())) ++valid_yes;
    }
    if (truth) {
      ++truth_yes;
      recalled += r.yes ? 1 : 0;
    }
    if (r.sketch == g) {
      ++exact_h;
      exact_h_agree += r.yes == truth ? 1 : 0;
    }
  }
  const double a = said_yes ? static_cast<double>(valid_yes) / static_cast<double>(said_yes) : 1.0;
  const double b = truth_yes ? static_cast<double>(recalled) / static_cast<double>(truth_yes) : 1.0;
  const bool pass = a >= kCvdWitnessRate && b >= kCvdRecallRate && exact_h_agree == exact_h && truth_yes > 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "witness-valid %zu/%zu (%.3f >= %.2f), recall %zu/%zu (%.3f >= %.2f), H==G in %zu trials, %zu agree",
                valid_yes, said_yes, a, kCvdWitnessRate, recalled, truth_yes, b, kCvdRecallRate, exact_h, exact_h_agree);
  report(3, "cvd-sketch-correctness", pass, buf, start);
}

// ---------------------------------------------------------------------------

void criterion_sampler() {
  const auto start = Clock::now();
  std::mt19937_64 rng(4242);
  const std::size_t scripts = 100000;
  std::size_t false_returns = 0, absent = 0, nonempty = 0;
  const std::uint64_t universe = 64 * 64;
  for (std::size_t t = 0; t < scripts; ++t) {
    L0Sampler s(universe, rng());
    std::vector<std::uint64_t> live;
    const std::size_t ops = 5 + rng() % 40;
    for (std::size_t i = 0; i < ops; ++i) {
      if (!live.empty() && rng() % 2 == 0) {
        const std::size_t at = rng() % live.size();
        s.update(live[at], -1);
        live[at] = live.back();
        live.pop_back();
      } else {
        const std::uint64_t x = rng() % universe;
        if (std::find(live.begin(), live.end(), x) == live.end()) {
          s.update(x, +1);
          live.push_back(x);
        }
      }
    }
    const auto q = s.query();
    if (!live.empty()) ++nonempty;
    if (q) {
      if (std::find(live.begin(), live.end(), *q) == live.end()) ++false_returns;
    } else if (!live.empty()) {
      ++absent;
    }
  }
  const double false_rate = static_cast<double>(false_returns) / static_cast<double>(scripts);

  std::map<std::uint64_t, int> freq;
  int returned = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    L0Sampler s(universe, mix_seed(seed, 99));
    for (std::uint64_t x = 0; x < 16; ++x) s.update(x * 257 + 3, +1);
    if (auto q = s.query()) {
      ++freq[*q];
      ++returned;
    }
  }
  const double expect = returned / 16.0;
  double worst = 0;
  for (std::uint64_t x = 0; x < 16; ++x) {
    const double f = freq.count(x * 257 + 3) ? freq[x * 257 + 3] : 0;
    worst = std::max(worst, std::abs(f - expect) / expect);
  }
  const bool uniform = freq.size() == 16 && worst <= kUniformSlack;

  std::size_t singleton_ok = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    L0Sampler s(universe, seed);
    const std::uint64_t x = mix_seed(seed, 5) % universe;
    s.update(x, +1);
    singleton_ok += s.query() == std::optional<std::uint64_t>(x) ? 1 : 0;
  }
  const bool pass = false_rate < kSamplerFalseRate && uniform && singleton_ok == 10000;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "false returns %zu/%zu, absent on %zu/%zu non-empty, worst uniform deviation %.3f (<= %.2f), "
                "singletons %zu/10000",
                false_returns, scripts, absent, nonempty, worst, kUniformSlack, singleton_ok);
  report(4, "l0-sampler-contract", pass, buf, start);
}

// ---------------------------------------------------------------------------

void criterion_space() {
  const auto start = Clock::now();
  const std::size_t n = 1024;
  std::vector<double> ks, words, materialized;
  bool closed_form = true;
  for (std::size_t K : {2, 4, 8, 16}) {
    const Graph g = random_cover_graph(n, K, 0.05, K);
    const CvdParams p{n, K, 0, 16, 10, 7 * K};
    const CvdReport r = run_cvd(graph_to_stream(g, StreamModel::EA, K), p);
    closed_form = closed_form && r.space_words == cvd_space_report(p) && r.materialized_words <= r.space_words;
    ks.push_back(static_cast<double>(K));
    words.push_back(static_cast<double>(r.space_words));
    materialized.push_back(static_cast<double>(r.materialized_words));
  }
  const double cvd_exp = slope(ks, words);

  const std::size_t d = 2;
  std::vector<double> cn_edges;
  for (std::size_t m : {100, 1000, 10000}) {
    const Graph g = make_complete_bipartite(2, m);
    const auto hs = run_common_neighbor(test::random_al(g, m), structural_config(2, d));
    cn_edges.push_back(static_cast<double>(cn_space_report(hs, structural_config(2, d)).words));
  }
  const double flat = *std::max_element(cn_edges.begin(), cn_edges.end()) /
                      *std::min_element(cn_edges.begin(), cn_edges.end());
  std::vector<double> cn_k, cn_words;
  for (std::size_t K : {2, 4, 8, 16}) {
    const Graph g = make_complete_bipartite(K, 400);
    const CnConfig cfg = structural_config(K, d);
    const auto hs = run_common_neighbor(test::random_al(g, K), cfg);
    cn_k.push_back(static_cast<double>(K));
    cn_words.push_back(static_cast<double>(cn_space_report(hs, cfg).words));
  }
  const double cn_exp = slope(cn_k, cn_words);
  const double cn_limit = static_cast<double>(d) + 1.3;
  const bool pass = closed_form && cvd_exp <= kCvdExponentLimit && flat <= kCnFlatSlack && cn_exp <= cn_limit;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "cvd exponent %.2f (<= %.1f, touched-cell exponent %.2f), cn K_{2,m} max/min %.2f (<= %.2f), "
                "cn exponent %.2f (<= %.1f)",
                cvd_exp, kCvdExponentLimit, slope(ks, materialized), flat, kCnFlatSlack, cn_exp, cn_limit);
  report(5, "space-scaling", pass, buf, start);
}

// ---------------------------------------------------------------------------

bool has_triangle(const Graph& g) { return find_forbidden_subgraph(g, FamilySpec::triangle()).has_value(); }

void criterion_gadgets() {
  const auto start = Clock::now();
  std::size_t checks = 0, failures = 0;
  auto expect = [&](bool ok) {
    ++checks;
    failures += ok ? 0 : 1;
  };
  const auto odd_free = Property::subgraph_free(FamilySpec::odd_cycles());

  // Concatenated bit string, built without phi.
  auto perm_string = [](const std::vector<std::size_t>& pi) {
    std::string out;
    for (std::size_t v : pi) {
      out += (v % 4) >> 1 & 1U ? '1' : '0';
      out += (v % 4) & 1U ? '1' : '0';
    }
    return out;
  };
  expect(perm_string({3, 4, 2, 1}) == "11001001");
  std::vector<std::size_t> pi{1, 2, 3, 4};
  do {
    for (std::size_t j = 1; j <= 8; ++j) {
      const PermInstance inst{4, pi, j};
      const bool one = perm_string(pi)[j - 1] == '1';
      expect(perm_value(inst) == (one ? 1 : 0));
      const Stream fvs = gen_perm_fvs(inst);
      const Graph gf = replay(fvs);
      expect(!validate(fvs) && fvs.model == StreamModel::AL);
      expect(has_cycle(gf) == one);
      expect(satisfies(gf, odd_free));  // any cycle is even
      const Stream td = gen_perm_td(inst);
      expect(!validate(td) && td.model == StreamModel::VA);
      expect(has_triangle(replay(td)) == one);
    }
  } while (std::next_permutation(pi.begin(), pi.end()));

  for (std::uint32_t xm = 0; xm < 16; ++xm) {
    for (std::uint32_t ym = 0; ym < 16; ++ym) {
      DisjInstance inst{4, {}, {}};
      for (std::size_t i = 0; i < 4; ++i) {
        inst.x.push_back(static_cast<std::uint8_t>(xm >> (3 - i) & 1U));
        inst.y.push_back(static_cast<std::uint8_t>(ym >> (3 - i) & 1U));
      }
      const bool meet = (xm & ym) != 0;
      expect(disj_value(inst) == (meet ? 0 : 1));
      const Stream s1 = gen_disj_fvs(inst), s2 = gen_disj_fvs_vc(inst), s3 = gen_disj_td(inst),
                   s4 = gen_disj_td_vc(inst), s5 = gen_disj_cvd(inst);
      for (const Stream* s : {&s1, &s2, &s3, &s4, &s5}) expect(!validate(*s));
      const Graph g1 = replay(s1), g2 = replay(s2), g3 = replay(s3), g4 = replay(s4), g5 = replay(s5);
      expect(has_cycle(g1) == meet);
      expect(g1.max_degree() <= 4);
      expect(satisfies(g1, odd_free));
      expect(has_cycle(g2) == meet);
      expect(exact_min_vc(g2, 2).has_value());
      expect(has_triangle(g3) == meet);
      expect(has_triangle(g4) == meet);
      expect(exact_min_vc(g4, 2).has_value());
      expect(find_induced_p3(g5).has_value() == meet);
      expect(g5.max_degree() <= 2);
    }
  }

  // Figure captions, bit for bit.
  auto d = DisjInstance::from_strings;
  const PermInstance p5{4, {3, 4, 2, 1}, 5}, p4{4, {3, 4, 2, 1}, 4};
  expect(perm_value(p5) == 1 && perm_value(p4) == 0);
  expect(has_cycle(replay(gen_perm_fvs(p5))) && !has_cycle(replay(gen_perm_fvs(p4))));
  expect(has_triangle(replay(gen_perm_td(p5))) && !has_triangle(replay(gen_perm_td(p4))));
  expect(!has_cycle(replay(gen_disj_fvs(d("1001", "0100")))));
  expect(has_cycle(replay(gen_disj_fvs(d("1100", "0110")))));
  expect(!has_cycle(replay(gen_disj_fvs_vc(d("1000", "0101")))));
  expect(has_cycle(replay(gen_disj_fvs_vc(d("0011", "1010")))));
  expect(!has_triangle(replay(gen_disj_td(d("1001", "0100")))));
  expect(has_triangle(replay(gen_disj_td(d("0110", "1010")))));
  expect(!has_triangle(replay(gen_disj_td_vc(d("1000", "0101")))));
  expect(has_triangle(replay(gen_disj_td_vc(d("0011", "1010")))));
  expect(is_cluster_graph(replay(gen_disj_cvd(d("0101", "1000")))));
  expect(!is_cluster_graph(replay(gen_disj_cvd(d("1100", "0110")))));

  // Padding shifts the optimum by k.
  const FamilySpec fvs = FamilySpec::all_cycles();
  const Graph pad2 = replay(pad_with_disjoint_obstructions(gen_perm_fvs(p4), 2, ObstructionKind::C4));
  expect(!solve_subgraph_deletion(pad2, fvs, 1).yes && solve_subgraph_deletion(pad2, fvs, 2).yes);
  const Graph pad1 = replay(pad_with_disjoint_obstructions(gen_perm_fvs(p5), 1, ObstructionKind::C4));
  expect(!solve_subgraph_deletion(pad1, fvs, 1).yes && solve_subgraph_deletion(pad1, fvs, 2).yes);

  report(6, "gadget-biconditionals", failures <= kMaxGadgetFailures,
         std::to_string(failures) + " failures over " + std::to_string(checks) + " checks", start);
}

// ---------------------------------------------------------------------------

void criterion_solvers() {
  const auto start = Clock::now();
  const FamilySpec k3 = FamilySpec::explicit_list({make_complete(3)});
  const std::vector<FamilySpec> cycle_kinds{FamilySpec::all_cycles(), FamilySpec::triangle(),
                                            FamilySpec::odd_cycles(), FamilySpec::even_cycles()};
  std::size_t graphs = 0, calls = 0, mismatches = 0;
  auto compare = [&](const Graph& g, const Property& p, const std::function<Solution(std::size_t)>& solve) {
    // Ascending enumeration makes the witness a minimum solution.
    const OracleVerdict v = oracle_decide(g, 3, p);
    const std::size_t best = v.yes ? v.witness->size() : 4;
    for (std::size_t k = 0; k <= 3; ++k) {
      const Solution s = solve(k);
      ++calls;
      const bool ok = s.yes == (best <= k) && (!s.yes || (s.x.size() <= k && satisfies(delete_vertices(g, s.x), p)));
      mismatches += ok ? 0 : 1;
    }
  };
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : test::graphs_up_to_iso(n)) {
      ++graphs;
      compare(g, Property::cluster(), [&](std::size_t k) { return solve_cvd(g, k); });
      for (const FamilySpec& f : cycle_kinds) {
        compare(g, Property::subgraph_free(f), [&](std::size_t k) { return solve_subgraph_deletion(g, f, k); });
      }
      compare(g, Property::minor_free(k3), [&](std::size_t k) { return solve_minor_deletion(g, k3, k); });
    }
  }
  report(7, "solver-cross-validation", mismatches <= kMaxSolverMismatches,
         std::to_string(mismatches) + " mismatches over " + std::to_string(calls) + " solver calls on " +
             std::to_string(graphs) + " graphs",
         start);
}

}  // namespace

int main() {
  criterion_cn_equivalence();
  criterion_pipelines();
  criterion_cvd();
  criterion_sampler();
  criterion_space();
  criterion_gadgets();
  criterion_solvers();
  return all_pass ? 0 : 1;
}
