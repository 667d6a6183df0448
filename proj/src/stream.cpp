#include "gsf/stream.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace gsf {

std::string_view to_string(StreamModel m) {
  switch (m) {
    case StreamModel::EA: return "EA";
    case StreamModel::DEA: return "DEA";
    case StreamModel::VA: return "VA";
    case StreamModel::AL: return "AL";
  }
  return "?";
}

StreamModel parse_model(std::string_view s) {
  if (s == "EA") return StreamModel::EA;
  if (s == "DEA") return StreamModel::DEA;
  if (s == "VA") return StreamModel::VA;
  if (s == "AL") return StreamModel::AL;
  throw std::invalid_argument("unknown stream model '" + std::string(s) + "'");
}

// --- validation -----------------------------------------------------------

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* event_name(const StreamEvent& ev) {
  return std::visit(Overloaded{[](const EdgeInsert&) { return "insert"; },
                               [](const EdgeDelete&) { return "delete"; },
                               [](const EdgeArrive&) { return "edge arrival"; },
                               [](const VertexExpose&) { return "exposure"; }},
                    ev);
}

bool event_allowed(StreamModel m, const StreamEvent& ev) {
  switch (m) {
    case StreamModel::EA: return std::holds_alternative<EdgeArrive>(ev);
    case StreamModel::DEA:
      return std::holds_alternative<EdgeInsert>(ev) || std::holds_alternative<EdgeDelete>(ev);
    case StreamModel::VA:
    case StreamModel::AL: return std::holds_alternative<VertexExpose>(ev);
  }
  return false;
}

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

class Validator {
 public:
  explicit Validator(const Stream& s) : s_(s), exposed_(s.n, 0), waiting_on_(s.n, 0) {}

  std::optional<StreamViolation> run() {
    for (std::size_t i = 0; i < s_.events.size(); ++i) {
      const StreamEvent& ev = s_.events[i];
      if (!event_allowed(s_.model, ev)) {
        return StreamViolation{i, std::string(event_name(ev)) + " not allowed in " +
                                      std::string(to_string(s_.model)) + " stream"};
      }
      if (auto err = std::visit([&](const auto& e) { return check(i, e); }, ev)) return err;
    }
    if (s_.model == StreamModel::AL) {
      for (const auto& [edge, where] : al_pending_) {
        return StreamViolation{where, "AL edge " + pair_text(edge.u, edge.v) +
                                          " revealed at only one endpoint"};
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<StreamViolation> check_pair(std::size_t i, Vertex u, Vertex v) const {
    if (u >= s_.n || v >= s_.n) return StreamViolation{i, "vertex id out of range"};
    if (u == v) return StreamViolation{i, "self-loop at " + std::to_string(u + 1)};
    return std::nullopt;
  }

  std::optional<StreamViolation> check(std::size_t i, const EdgeArrive& e) {
    if (auto err = check_pair(i, e.u, e.v)) return err;
    if (!live_.insert(Edge(e.u, e.v)).second) {
      return StreamViolation{i, "duplicate edge " + pair_text(e.u, e.v)};
    }
    return std::nullopt;
  }

  std::optional<StreamViolation> check(std::size_t i, const EdgeInsert& e) {
    if (auto err = check_pair(i, e.u, e.v)) return err;
    if (!live_.insert(Edge(e.u, e.v)).second) {
      return StreamViolation{i, "insert of live edge " + pair_text(e.u, e.v)};
    }
    return std::nullopt;
  }

  std::optional<StreamViolation> check(std::size_t i, const EdgeDelete& e) {
    if (auto err = check_pair(i, e.u, e.v)) return err;
    if (live_.erase(Edge(e.u, e.v)) == 0) {
      return StreamViolation{i, "delete of non-live edge " + pair_text(e.u, e.v)};
    }
    return std::nullopt;
  }

  std::optional<StreamViolation> check(std::size_t i, const VertexExpose& e) {
    if (e.v >= s_.n) return StreamViolation{i, "vertex id out of range"};
    if (exposed_[e.v]) return StreamViolation{i, "vertex " + std::to_string(e.v + 1) + " exposed twice"};
    std::set<Vertex> seen;
    std::size_t resolved = 0;
    for (Vertex x : e.neighbors) {
      if (auto err = check_pair(i, e.v, x)) return err;
      if (!seen.insert(x).second) {
        return StreamViolation{i, "edge " + pair_text(e.v, x) + " repeated within exposure"};
      }
      if (s_.model == StreamModel::VA) {
        if (!exposed_[x]) {
          return StreamViolation{i, "VA edge " + pair_text(e.v, x) + " to unexposed vertex"};
        }
      } else {
        const Edge edge(e.v, x);
        if (exposed_[x]) {
          if (al_pending_.erase(edge) == 0) {
            return StreamViolation{i, "AL edge " + pair_text(e.v, x) + " missing at endpoint " +
                                          std::to_string(x + 1)};
          }
          ++resolved;
        } else {
          al_pending_.emplace(edge, i);
          ++waiting_on_[x];
        }
      }
    }
    if (s_.model == StreamModel::AL && resolved != waiting_on_[e.v]) {
      // Some earlier exposure listed an edge to v that this one omits.
      for (const auto& [edge, where] : al_pending_) {
        if ((edge.u == e.v || edge.v == e.v) && where != i) {
          return StreamViolation{i, "AL edge " + pair_text(edge.u, edge.v) + " missing at endpoint " +
                                        std::to_string(e.v + 1)};
        }
      }
    }
    exposed_[e.v] = 1;
    return std::nullopt;
  }

  const Stream& s_;
  std::vector<char> exposed_;
  std::vector<std::size_t> waiting_on_;  // pending AL edges per unexposed endpoint
  std::set<Edge> live_;
  std::map<Edge, std::size_t> al_pending_;  // edge -> index of first exposure
};

}  // namespace

std::optional<StreamViolation> validate(const Stream& s) { return Validator(s).run(); }

void require_valid(const Stream& s) {
  if (auto err = validate(s)) throw MalformedStream(*err);
}

Graph replay(const Stream& s) {
  require_valid(s);
  Graph g(s.n);
  for (const StreamEvent& ev : s.events) {
    std::visit(Overloaded{[&](const EdgeInsert& e) { g.add_edge(e.u, e.v); },
                          [&](const EdgeDelete& e) { g.remove_edge(e.u, e.v); },
                          [&](const EdgeArrive& e) { g.add_edge(e.u, e.v); },
                          [&](const VertexExpose& e) {
                            for (Vertex x : e.neighbors) g.add_edge(e.v, x);
                          }},
               ev);
  }
  return g;
}

// --- adapters ---------------------------------------------------------------

Stream graph_to_stream(const Graph& g, StreamModel model, std::span<const Vertex> vertex_order,
                       std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  {
    std::vector<Vertex> check(vertex_order.begin(), vertex_order.end());
    std::sort(check.begin(), check.end());
    std::vector<Vertex> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    if (check != ident) throw std::invalid_argument("vertex_order is not a permutation of the vertices");
  }
  std::mt19937_64 rng(seed);
  Stream s;
  s.model = model;
  s.n = n;
  if (model == StreamModel::EA || model == StreamModel::DEA) {
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (const Edge& e : edges) {
      if (model == StreamModel::EA) {
        s.events.emplace_back(EdgeArrive{e.u, e.v});
      } else {
        s.events.emplace_back(EdgeInsert{e.u, e.v});
      }
    }
    return s;
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[vertex_order[i]] = i;
  for (Vertex v : vertex_order) {
    VertexExpose ex{v, {}};
    for (Vertex w : g.neighbors(v)) {
      if (model == StreamModel::AL || position[w] < position[v]) ex.neighbors.push_back(w);
    }
    std::shuffle(ex.neighbors.begin(), ex.neighbors.end(), rng);
    s.events.emplace_back(std::move(ex));
  }
  return s;
}

Stream graph_to_stream(const Graph& g, StreamModel model, std::uint64_t seed) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  return graph_to_stream(g, model, order, seed);
}

Stream dea_with_deletions(const Graph& g, std::size_t decoys, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  std::mt19937_64 rng(seed);
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
    }
  }
  std::shuffle(non_edges.begin(), non_edges.end(), rng);
  non_edges.resize(std::min(decoys, non_edges.size()));

  // Each real edge is one insert; each decoy an insert followed later by its
  // delete. Random interleaving keeps every delete after its insert.
  struct Token {
    Edge e;
    bool decoy;
  };
  std::vector<Token> tokens;
  for (const Edge& e : g.edges()) tokens.push_back({e, false});
  for (const Edge& e : non_edges) {
    tokens.push_back({e, true});
    tokens.push_back({e, true});
  }
  std::shuffle(tokens.begin(), tokens.end(), rng);
  std::set<Edge> inserted;
  Stream s;
  s.model = StreamModel::DEA;
  s.n = n;
  for (const Token& t : tokens) {
    const bool orient = rng() & 1U;
    const Vertex a = orient ? t.e.u : t.e.v;
    const Vertex b = orient ? t.e.v : t.e.u;
    if (!t.decoy || inserted.insert(t.e).second) {
      s.events.emplace_back(EdgeInsert{a, b});
    } else {
      s.events.emplace_back(EdgeDelete{a, b});
    }
  }
  return s;
}

Stream ea_as_dea(const Stream& s) {
  if (s.model != StreamModel::EA) throw std::invalid_argument("ea_as_dea expects an EA stream");
  Stream out;
  out.model = StreamModel::DEA;
  out.n = s.n;
  for (const StreamEvent& ev : s.events) {
    const auto& e = std::get<EdgeArrive>(ev);
    out.events.emplace_back(EdgeInsert{e.u, e.v});
  }
  return out;
}

// --- wire format ------------------------------------------------------------

namespace {

Vertex parse_vertex(const std::string& tok, std::size_t n, std::size_t lineno) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(lineno, "bad vertex id '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(lineno, "bad vertex id '" + tok + "'");
  if (v < 1 || static_cast<std::size_t>(v) > n) {
    throw ParseError(lineno, "vertex id " + tok + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

}  // namespace

Stream read_stream(std::istream& in) {
  Stream s;
  std::string line;
  std::size_t lineno = 0;
  bool have_model = false;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string tag;
    if (!(row >> tag)) continue;
    if (!have_model) {
      std::string name;
      if (tag != "model" || !(row >> name)) throw ParseError(lineno, "expected 'model <EA|DEA|VA|AL>'");
      try {
        s.model = parse_model(name);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      have_model = true;
      continue;
    }
    if (!have_n) {
      long long n = -1;
      if (tag != "n" || !(row >> n) || n < 0) throw ParseError(lineno, "expected 'n <count>'");
      s.n = static_cast<std::size_t>(n);
      have_n = true;
      continue;
    }
    auto read_pair = [&]() {
      std::string a, b;
      if (!(row >> a >> b)) throw ParseError(lineno, "expected two vertex ids");
      return std::pair{parse_vertex(a, s.n, lineno), parse_vertex(b, s.n, lineno)};
    };
    if (tag == "e") {
      auto [u, v] = read_pair();
      s.events.emplace_back(EdgeArrive{u, v});
    } else if (tag == "+") {
      auto [u, v] = read_pair();
      s.events.emplace_back(EdgeInsert{u, v});
    } else if (tag == "-") {
      auto [u, v] = read_pair();
      s.events.emplace_back(EdgeDelete{u, v});
    } else if (tag == "x") {
      std::string tok, colon;
      if (!(row >> tok)) throw ParseError(lineno, "expected exposed vertex");
      VertexExpose ex{parse_vertex(tok, s.n, lineno), {}};
      if (!(row >> colon) || colon != ":") throw ParseError(lineno, "expected ':' after exposed vertex");
      while (row >> tok) ex.neighbors.push_back(parse_vertex(tok, s.n, lineno));
      s.events.emplace_back(std::move(ex));
    } else {
      throw ParseError(lineno, "unknown event tag '" + tag + "'");
    }
    std::string extra;
    if (tag != "x" && (row >> extra)) throw ParseError(lineno, "trailing input '" + extra + "'");
  }
  if (!have_model || !have_n) throw ParseError(lineno, "missing stream header");
  return s;
}

Stream read_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_stream(in);
}

void write_stream(std::ostream& out, const Stream& s) {
  out << "model " << to_string(s.model) << '\n' << "n " << s.n << '\n';
  for (const StreamEvent& ev : s.events) {
    std::visit(Overloaded{[&](const EdgeInsert& e) { out << "+ " << e.u + 1 << ' ' << e.v + 1 << '\n'; },
                          [&](const EdgeDelete& e) { out << "- " << e.u + 1 << ' ' << e.v + 1 << '\n'; },
                          [&](const EdgeArrive& e) { out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n'; },
                          [&](const VertexExpose& e) {
                            out << "x " << e.v + 1 << " :";
                            for (Vertex x : e.neighbors) out << ' ' << x + 1;
                            out << '\n';
                          }},
               ev);
  }
}

}  // namespace gsf
