#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gsf/common_neighbor.hpp"
#include "gsf/cvd_stream.hpp"
#include "gsf/gadgets.hpp"
#include "gsf/oracle.hpp"
#include "gsf/pipeline.hpp"
#include "gsf/solvers.hpp"
#include "gsf/stream.hpp"

namespace py = pybind11;
using namespace gsf;

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Stream parse_stream(const std::string& text) {
  std::istringstream in(text);
  return read_stream(in);
}

std::string format_stream(const Stream& s) {
  std::ostringstream out;
  write_stream(out, s);
  return out.str();
}

Property property_for(Problem p, const std::vector<Graph>& family) {
  switch (p) {
    case Problem::CVD: return Property::cluster();
    case Problem::Minor: return Property::minor_free(family_for(p, family));
    default: return Property::subgraph_free(family_for(p, family));
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Streaming graph sketches and parameterized deletion solvers";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MalformedStream>(m, "MalformedStream", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             Graph g(n);
             for (auto [u, v] : edges) g.add_edge(u, v);
             return g;
           }),
           py::arg("n"), py::arg("edges"))
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def("edges", &edge_list)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  py::class_<Stream>(m, "Stream")
      .def_property_readonly("n", [](const Stream& s) { return s.n; })
      .def_property_readonly("model", [](const Stream& s) { return std::string(to_string(s.model)); })
      .def("__len__", [](const Stream& s) { return s.events.size(); })
      .def("to_text", &format_stream);

  m.def("parse_stream", &parse_stream, py::arg("text"));
  m.def("graph_to_stream",
        [](const Graph& g, const std::string& model, std::uint64_t seed) {
          return graph_to_stream(g, parse_model(model), seed);
        },
        py::arg("graph"), py::arg("model"), py::arg("seed") = 0);
  m.def("dea_with_deletions", &dea_with_deletions, py::arg("graph"), py::arg("decoys"), py::arg("seed") = 0);
  m.def("replay", &replay);
  m.def("validate", [](const Stream& s) -> std::optional<std::pair<std::size_t, std::string>> {
    if (auto v = validate(s)) return std::make_pair(v->event_index, v->message);
    return std::nullopt;
  });

  m.def(
      "run_cvd",
      [](const Stream& s, std::size_t K, std::size_t k, std::uint64_t seed, std::size_t alpha, std::size_t beta) {
        const CvdReport r = run_cvd(s, CvdParams{s.n, K, k, alpha, beta, seed, false});
        py::dict d;
        d["yes"] = r.yes;
        d["solution"] = r.solution;
        d["space_words"] = r.space_words;
        d["sketch_edges"] = r.sketch_edges;
        d["extraction_failures"] = r.extraction_failures;
        d["sketch"] = r.sketch;
        return d;
      },
      py::arg("stream"), py::arg("K"), py::arg("k"), py::arg("seed") = 0, py::arg("alpha") = 16, py::arg("beta") = 10);

  m.def(
      "common_neighbor",
      [](const Stream& s, std::size_t K, std::size_t d, std::size_t ell) {
        CnConfig cfg = structural_config(K, d);
        if (ell > 0) cfg.ell = ell;
        const CommonNeighborSubgraph hs = run_common_neighbor(s, cfg);
        const CnSpaceReport sp = cn_space_report(hs, cfg);
        py::dict out;
        out["h"] = hs.h;
        std::vector<std::pair<Vertex, Vertex>> matching;
        for (const Edge& e : hs.matching.pairs) matching.emplace_back(e.u, e.v);
        out["matching"] = matching;
        out["words"] = sp.words;
        out["within_bound"] = sp.within_bound;
        const auto bad = validate_cn_subgraph(replay(s), hs, cfg);
        out["valid"] = !bad.has_value();
        return out;
      },
      py::arg("stream"), py::arg("K"), py::arg("d"), py::arg("ell") = 0);

  m.def(
      "solve",
      [](const std::string& problem, const Graph& g, std::size_t k, const std::vector<Graph>& family) {
        const Problem p = parse_problem(problem);
        Solution s;
        if (p == Problem::CVD) s = solve_cvd(g, k);
        else if (p == Problem::Minor) s = solve_minor_deletion(g, family_for(p, family), k);
        else s = solve_subgraph_deletion(g, family_for(p, family), k);
        return s.yes ? std::optional<VertexSet>(s.x) : std::nullopt;
      },
      py::arg("problem"), py::arg("graph"), py::arg("k"), py::arg("family") = std::vector<Graph>{},
      "Deletion set of size <= k, or None.");

  m.def(
      "oracle",
      [](const std::string& problem, const Graph& g, std::size_t k, const std::vector<Graph>& family) {
        const OracleVerdict v = oracle_decide(g, k, property_for(parse_problem(problem), family));
        return v.witness;
      },
      py::arg("problem"), py::arg("graph"), py::arg("k"), py::arg("family") = std::vector<Graph>{});

  m.def(
      "run_pipeline",
      [](const std::string& problem, const Stream& s, std::size_t K, std::size_t k, const std::vector<Graph>& family) {
        const Problem p = parse_problem(problem);
        const auto mode = p == Problem::Minor ? Containment::Minor : Containment::Subgraph;
        const PipelineReport r = run_deletion_pipeline(s, family_for(p, family), mode, K, k);
        return r.solution.yes ? std::optional<VertexSet>(r.solution.x) : std::nullopt;
      },
      py::arg("problem"), py::arg("stream"), py::arg("K"), py::arg("k"), py::arg("family") = std::vector<Graph>{});

  m.def(
      "gen_perm",
      [](const std::string& gadget, const std::vector<std::size_t>& pi, std::size_t j) {
        const PermInstance inst{pi.size(), pi, j};
        if (gadget == "perm-fvs") return gen_perm_fvs(inst);
        if (gadget == "perm-td") return gen_perm_td(inst);
        throw std::invalid_argument("unknown perm gadget '" + gadget + "'");
      },
      py::arg("gadget"), py::arg("pi"), py::arg("j"));
  m.def(
      "gen_disj",
      [](const std::string& gadget, const std::string& x, const std::string& y) {
        const DisjInstance inst = DisjInstance::from_strings(x, y);
        if (gadget == "disj-fvs") return gen_disj_fvs(inst);
        if (gadget == "disj-fvs-vc") return gen_disj_fvs_vc(inst);
        if (gadget == "disj-td") return gen_disj_td(inst);
        if (gadget == "disj-td-vc") return gen_disj_td_vc(inst);
        if (gadget == "disj-cvd") return gen_disj_cvd(inst);
        throw std::invalid_argument("unknown disj gadget '" + gadget + "'");
      },
      py::arg("gadget"), py::arg("x"), py::arg("y"));
  m.def("perm_value", [](const std::vector<std::size_t>& pi, std::size_t j) {
    return perm_value(PermInstance{pi.size(), pi, j});
  });
}
