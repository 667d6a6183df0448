#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "gsf/common_neighbor.hpp"
#include "gsf/cvd_stream.hpp"
#include "gsf/gadgets.hpp"
#include "gsf/graph.hpp"
#include "gsf/oracle.hpp"
#include "gsf/pipeline.hpp"
#include "gsf/random_graphs.hpp"
#include "gsf/solvers.hpp"
#include "gsf/stream.hpp"

namespace gsf::cli {

using Json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

Json one_based(const VertexSet& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v + 1);
  return a;
}

Json edges_json(const Graph& g) {
  Json a = Json::array();
  for (const Edge& e : g.edges()) a.push_back({e.u + 1, e.v + 1});
  return a;
}

Json solution_json(const Solution& s) {
  Json j;
  j["answer"] = s.yes ? "YES" : "NO";
  if (s.yes) j["solution"] = one_based(s.x);
  return j;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GSF_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("GSF_SEED is not an unsigned integer");
    }
  }
  return 0;
}

std::vector<Graph> read_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file " + path);
  return read_graph_list(in);
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoull(item));
  }
  return out;
}

void print_pretty(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      print_pretty(out, *it, key);
    } else {
      out << std::left << std::setw(28) << key << ' ' << it->dump() << '\n';
    }
  }
}

struct Emitter {
  std::ostream& out;
  bool pretty = false;

  void operator()(const Json& j) const {
    if (pretty) {
      print_pretty(out, j);
      out << '\n';
    } else {
      out << j.dump() << '\n';
    }
  }
};

Json report(const std::string& sub, Json params, Json result, Clock::time_point start, std::uint64_t seed) {
  Json j;
  j["subcommand"] = sub;
  j["params"] = std::move(params);
  j["result"] = std::move(result);
  j["wall_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  j["seed"] = seed;
  return j;
}

Property property_for(Problem p, const std::string& family_file) {
  switch (p) {
    case Problem::CVD: return Property::cluster();
    case Problem::Minor: return Property::minor_free(family_for(p, read_family(family_file)));
    case Problem::Subgraph: return Property::subgraph_free(family_for(p, read_family(family_file)));
    default: return Property::subgraph_free(family_for(p));
  }
}

Solution solve_offline(Problem p, const Graph& g, std::size_t k, const std::string& family_file) {
  switch (p) {
    case Problem::CVD: return solve_cvd(g, k);
    case Problem::Minor: return solve_minor_deletion(g, family_for(p, read_family(family_file)), k);
    case Problem::Subgraph: return solve_subgraph_deletion(g, family_for(p, read_family(family_file)), k);
    default: return solve_subgraph_deletion(g, family_for(p), k);
  }
}

Json cvd_json(const CvdReport& r) {
  Json j;
  j["answer"] = r.yes ? "YES" : "NO";
  if (r.yes) j["solution"] = one_based(r.solution);
  j["space_words"] = r.space_words;
  j["materialized_words"] = r.materialized_words;
  j["sketch_edges"] = r.sketch_edges;
  j["extraction_failures"] = r.extraction_failures;
  return j;
}

Json cn_space_json(const CnSpaceReport& s) {
  Json j;
  j["edges"] = s.edges;
  j["matching_edges"] = s.matching_edges;
  j["tracked_subsets"] = s.tracked_subsets;
  j["words"] = s.words;
  j["edge_bound"] = s.edge_bound;
  j["within_bound"] = s.within_bound;
  return j;
}

Stream shuffled_al(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return graph_to_stream(g, StreamModel::AL, order, seed);
}

int bench_cvd(const Emitter& emit, std::size_t n, const std::vector<std::size_t>& ks, std::size_t trials,
              std::size_t alpha, std::size_t beta, std::uint64_t seed) {
  std::vector<double> xs, ys;
  for (std::size_t K : ks) {
    double peak = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto start = Clock::now();
      const std::uint64_t s = seed + 1000 * K + t;
      const Graph g = random_cover_graph(n, std::min(K, n), 0.3, s);
      const Stream st = dea_with_deletions(g, g.num_edges() / 2 + 1, s);
      CvdParams p{n, K, std::min<std::size_t>(1, K), alpha, beta, s, false};
      const CvdReport r = run_cvd(st, p);
      peak = std::max(peak, static_cast<double>(r.space_words));
      Json params{{"suite", "cvd"}, {"n", n}, {"K", K}, {"trial", t}, {"alpha", alpha}, {"beta", beta}};
      Json result = cvd_json(r);
      result["closed_form_words"] = cvd_space_report(p);
      emit(report("bench", params, result, start, s));
    }
    xs.push_back(static_cast<double>(K));
    ys.push_back(peak);
  }
  if (xs.size() < 2) return 0;
  const double slope = fitted_exponent(xs, ys);
  const bool pass = slope <= 2.3;
  emit(Json{{"subcommand", "bench"}, {"summary", "cvd"}, {"exponent_in_K", slope}, {"limit", 2.3}, {"pass", pass}});
  return pass ? 0 : 2;
}

int bench_cn(const Emitter& emit, const std::vector<std::size_t>& ks, const std::vector<std::size_t>& ms,
             std::size_t d, std::uint64_t seed) {
  std::vector<double> xs, ys;
  bool flat = true;
  for (std::size_t K : ks) {
    double lo = 0, hi = 0;
    for (std::size_t m : ms) {
      const auto start = Clock::now();
      const CnConfig cfg = structural_config(std::max(K, d), d);
      const Graph g = make_complete_bipartite(K, m);
      const Stream st = shuffled_al(g, seed + K * 7919 + m);
      const CommonNeighborSubgraph hs = run_common_neighbor(st, cfg);
      const CnSpaceReport sp = cn_space_report(hs, cfg);
      const auto w = static_cast<double>(sp.words);
      lo = lo == 0 ? w : std::min(lo, w);
      hi = std::max(hi, w);
      Json params{{"suite", "cn"}, {"K", K}, {"m", m}, {"d", d}, {"ell", cfg.ell}};
      emit(report("bench", params, cn_space_json(sp), start, seed));
    }
    if (hi > 1.25 * lo) flat = false;
    xs.push_back(static_cast<double>(K));
    ys.push_back(hi);
  }
  Json summary{{"subcommand", "bench"}, {"summary", "cn"}, {"flat_in_m", flat}};
  bool pass = flat;
  if (xs.size() >= 2) {
    const double slope = fitted_exponent(xs, ys);
    summary["exponent_in_K"] = slope;
    summary["limit"] = static_cast<double>(d) + 1.3;
    pass = pass && slope <= static_cast<double>(d) + 1.3;
  }
  summary["pass"] = pass;
  emit(summary);
  return pass ? 0 : 2;
}

}  // namespace

double fitted_exponent(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  return denom == 0 ? 0.0 : (static_cast<double>(n) * sxy - sx * sy) / denom;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming graph sketches and parameterized deletion solvers", "gsf"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable table instead of JSON lines");

  std::uint64_t seed = 0;
  bool seed_given = false;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed",
        [&](const std::uint64_t& s) {
          seed = s;
          seed_given = true;
        },
        "Random seed (default: $GSF_SEED or 0)");
  };

  std::string stream_path, graph_path, family_path, problem, out_path;
  std::size_t K = 0, k = 0, d = 1, ell = 0, alpha = 16, beta = 10;
  bool exact = false;

  auto* run_cmd = app.add_subcommand("run", "Streaming pipeline on a stream file");
  run_cmd->add_option("--problem", problem, "cvd|fvs|ect|oct|td|subgraph|minor")->required();
  run_cmd->add_option("--stream", stream_path, "Stream file")->required();
  run_cmd->add_option("--K", K, "Vertex cover bound")->required();
  run_cmd->add_option("--k", k, "Solution size")->required();
  run_cmd->add_option("--family", family_path, "Family file (subgraph/minor)");
  run_cmd->add_option("--alpha", alpha, "Hash count factor (cvd)");
  run_cmd->add_option("--beta", beta, "Label count factor (cvd)");
  add_seed(run_cmd);

  auto* cn_cmd = app.add_subcommand("cn", "Common neighbor subgraph of an AL stream");
  cn_cmd->add_option("--stream", stream_path, "AL stream file")->required();
  cn_cmd->add_option("--K", K, "Vertex cover bound")->required();
  cn_cmd->add_option("--d", d, "Degree parameter")->required();
  cn_cmd->add_option("--ell", ell, "Common neighbor parameter (default (d+2)K)");
  cn_cmd->add_option("--out", out_path, "Write H here in the graph text format");

  auto* cvd_cmd = app.add_subcommand("cvd", "Cluster vertex deletion sketch on a DEA stream");
  cvd_cmd->add_option("--stream", stream_path, "DEA or EA stream file")->required();
  cvd_cmd->add_option("--K", K, "Vertex cover bound")->required();
  cvd_cmd->add_option("--k", k, "Solution size")->required();
  cvd_cmd->add_option("--alpha", alpha, "Hash count factor");
  cvd_cmd->add_option("--beta", beta, "Label count factor");
  cvd_cmd->add_flag("--exact", exact, "Use exact shadow samplers");
  add_seed(cvd_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Offline FPT solver on a graph file");
  solve_cmd->add_option("--problem", problem, "cvd|fvs|ect|oct|td|subgraph|minor")->required();
  solve_cmd->add_option("--graph", graph_path, "Graph file")->required();
  solve_cmd->add_option("--k", k, "Solution size")->required();
  solve_cmd->add_option("--family", family_path, "Family file (subgraph/minor)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground truth (n <= 16, k <= 4)");
  oracle_cmd->add_option("--problem", problem, "cvd|fvs|ect|oct|td|subgraph|minor")->required();
  oracle_cmd->add_option("--graph", graph_path, "Graph file")->required();
  oracle_cmd->add_option("--k", k, "Solution size")->required();
  oracle_cmd->add_option("--family", family_path, "Family file (subgraph/minor)");

  std::string gadget, pi_text, x_text, y_text, pad_kind = "C4";
  std::size_t gen_n = 0, j = 1, pad_k = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a reduction gadget as a stream file");
  gen_cmd
      ->add_option("--gadget", gadget, "perm-fvs|disj-fvs|disj-fvs-vc|perm-td|disj-td|disj-td-vc|disj-cvd")
      ->required();
  gen_cmd->add_option("--n", gen_n, "Instance size");
  gen_cmd->add_option("--pi", pi_text, "Permutation, comma separated (perm gadgets)");
  gen_cmd->add_option("--j", j, "Bit index (perm gadgets)");
  gen_cmd->add_option("--x", x_text, "Alice's bits, e.g. 1001 (disj gadgets)");
  gen_cmd->add_option("--y", y_text, "Bob's bits (disj gadgets)");
  gen_cmd->add_option("--pad-k", pad_k, "Append this many disjoint obstructions");
  gen_cmd->add_option("--pad-kind", pad_kind, "C4|triangle|P3");
  gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

  std::string suite = "cvd", k_list = "2,4,8", m_list = "100,1000,10000";
  std::size_t bench_n = 64, trials = 1, bench_d = 2;
  auto* bench_cmd = app.add_subcommand("bench", "Space scaling sweep");
  bench_cmd->add_option("--suite", suite, "cvd|cn");
  bench_cmd->add_option("--n", bench_n, "Vertices (cvd)");
  bench_cmd->add_option("--K", k_list, "Comma separated K values");
  bench_cmd->add_option("--m", m_list, "Comma separated sizes of the large side (cn)");
  bench_cmd->add_option("--d", bench_d, "Degree parameter (cn)");
  bench_cmd->add_option("--trials", trials, "Trials per cell (cvd)");
  bench_cmd->add_option("--alpha", alpha, "Hash count factor (cvd)");
  bench_cmd->add_option("--beta", beta, "Label count factor (cvd)");
  add_seed(bench_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "Check a stream file against its model");
  validate_cmd->add_option("--stream", stream_path, "Stream file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const Emitter emit{out, pretty};
  const auto start = Clock::now();
  try {
    if (!seed_given) seed = default_seed();

    if (*run_cmd) {
      const Problem p = parse_problem(problem);
      const Stream s = read_stream_file(stream_path);
      Json params{{"problem", problem}, {"stream", stream_path}, {"K", K}, {"k", k}};
      Json result;
      if (p == Problem::CVD) {
        const Stream dea = s.model == StreamModel::EA ? ea_as_dea(s) : s;
        CvdParams cp{s.n, K, k, alpha, beta, seed, false};
        params["alpha"] = alpha;
        params["beta"] = beta;
        result = cvd_json(run_cvd(dea, cp));
      } else {
        const FamilySpec fam = family_for(p, p == Problem::Subgraph || p == Problem::Minor ? read_family(family_path)
                                                                                          : std::vector<Graph>{});
        const auto mode = p == Problem::Minor ? Containment::Minor : Containment::Subgraph;
        const PipelineReport r = run_deletion_pipeline(s, fam, mode, K, k);
        result = solution_json(r.solution);
        result["d"] = r.config.d;
        result["ell"] = r.config.ell;
        result["space"] = cn_space_json(r.space);
      }
      emit(report("run", params, result, start, seed));
      return 0;
    }

    if (*cn_cmd) {
      const Stream s = read_stream_file(stream_path);
      CnConfig cfg = structural_config(K, d);
      if (ell > 0) cfg.ell = ell;
      const CommonNeighborSubgraph hs = run_common_neighbor(s, cfg);
      Json result = cn_space_json(cn_space_report(hs, cfg));
      Json matching = Json::array();
      for (const Edge& e : hs.matching.pairs) matching.push_back({e.u + 1, e.v + 1});
      result["matching"] = matching;
      if (out_path.empty()) {
        result["h_edges"] = edges_json(hs.h);
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        write_graph(f, hs.h);
        result["h_file"] = out_path;
      }
      emit(report("cn", Json{{"stream", stream_path}, {"K", K}, {"d", cfg.d}, {"ell", cfg.ell}}, result, start, seed));
      return 0;
    }

    if (*cvd_cmd) {
      Stream s = read_stream_file(stream_path);
      if (s.model == StreamModel::EA) s = ea_as_dea(s);
      CvdParams cp{s.n, K, k, alpha, beta, seed, exact};
      Json params{{"stream", stream_path}, {"K", K}, {"k", k}, {"alpha", alpha}, {"beta", beta}, {"exact", exact}};
      emit(report("cvd", params, cvd_json(run_cvd(s, cp)), start, seed));
      return 0;
    }

    if (*solve_cmd) {
      const Problem p = parse_problem(problem);
      const Graph g = read_graph_file(graph_path);
      const Solution sol = solve_offline(p, g, k, family_path);
      emit(report("solve", Json{{"problem", problem}, {"graph", graph_path}, {"k", k}}, solution_json(sol), start,
                  seed));
      return 0;
    }

    if (*oracle_cmd) {
      const Problem p = parse_problem(problem);
      const Graph g = read_graph_file(graph_path);
      const OracleVerdict v = oracle_decide(g, k, property_for(p, family_path));
      Json result{{"answer", v.yes ? "YES" : "NO"}};
      if (v.witness) result["witness"] = one_based(*v.witness);
      result["checked_sets"] = v.checked_sets;
      emit(report("oracle", Json{{"problem", problem}, {"graph", graph_path}, {"k", k}}, result, start, seed));
      return 0;
    }

    if (*gen_cmd) {
      Stream s;
      if (gadget == "perm-fvs" || gadget == "perm-td") {
        PermInstance inst;
        for (std::size_t v : parse_list(pi_text)) inst.pi.push_back(v);
        inst.n = gen_n == 0 ? inst.pi.size() : gen_n;
        inst.j = j;
        s = gadget == "perm-fvs" ? gen_perm_fvs(inst) : gen_perm_td(inst);
      } else {
        const DisjInstance inst = DisjInstance::from_strings(x_text, y_text);
        if (gen_n != 0 && gen_n != inst.n) throw std::invalid_argument("--n differs from the length of --x");
        if (gadget == "disj-fvs") s = gen_disj_fvs(inst);
        else if (gadget == "disj-fvs-vc") s = gen_disj_fvs_vc(inst);
        else if (gadget == "disj-td") s = gen_disj_td(inst);
        else if (gadget == "disj-td-vc") s = gen_disj_td_vc(inst);
        else if (gadget == "disj-cvd") s = gen_disj_cvd(inst);
        else throw std::invalid_argument("unknown gadget '" + gadget + "'");
      }
      if (pad_k > 0) s = pad_with_disjoint_obstructions(s, pad_k, parse_obstruction(pad_kind));
      if (out_path.empty()) {
        write_stream(out, s);
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        write_stream(f, s);
        emit(report("gen", Json{{"gadget", gadget}, {"pad_k", pad_k}},
                    Json{{"file", out_path}, {"n", s.n}, {"events", s.events.size()}}, start, seed));
      }
      return 0;
    }

    if (*bench_cmd) {
      const auto ks = parse_list(k_list);
      if (suite == "cvd") return bench_cvd(emit, bench_n, ks, std::max<std::size_t>(1, trials), alpha, beta, seed);
      if (suite == "cn") return bench_cn(emit, ks, parse_list(m_list), bench_d, seed);
      throw std::invalid_argument("unknown bench suite '" + suite + "'");
    }

    if (*validate_cmd) {
      const Stream s = read_stream_file(stream_path);
      const auto v = validate(s);
      Json result{{"valid", !v.has_value()}, {"model", std::string(to_string(s.model))}, {"n", s.n},
                  {"events", s.events.size()}};
      if (v) {
        result["event_index"] = v->event_index;
        result["message"] = v->message;
      }
      emit(report("validate", Json{{"stream", stream_path}}, result, start, seed));
      return v ? 1 : 0;
    }
  } catch (const ParseError& e) {
    err << Json{{"error", e.what()}, {"line", e.line()}}.dump() << '\n';
    return 1;
  } catch (const MalformedStream& e) {
    err << Json{{"error", e.what()}, {"event_index", e.violation().event_index}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"error", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gsf::cli
