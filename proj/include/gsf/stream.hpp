#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gsf/graph.hpp"

namespace gsf {

/// Arrival models: edge arrival, dynamic edge arrival (insert/delete),
/// vertex arrival (edges to earlier vertices only) and adjacency list (every
/// edge revealed at both endpoints).
enum class StreamModel { EA, DEA, VA, AL };

std::string_view to_string(StreamModel m);
StreamModel parse_model(std::string_view s);

struct EdgeInsert {
  Vertex u, v;
  friend bool operator==(const EdgeInsert&, const EdgeInsert&) = default;
};
struct EdgeDelete {
  Vertex u, v;
  friend bool operator==(const EdgeDelete&, const EdgeDelete&) = default;
};
struct EdgeArrive {
  Vertex u, v;
  friend bool operator==(const EdgeArrive&, const EdgeArrive&) = default;
};
/// Exposure of `v`; `neighbors` lists the other endpoint of each revealed
/// edge in arrival order.
struct VertexExpose {
  Vertex v;
  std::vector<Vertex> neighbors;
  friend bool operator==(const VertexExpose&, const VertexExpose&) = default;
};

using StreamEvent = std::variant<EdgeInsert, EdgeDelete, EdgeArrive, VertexExpose>;

struct Stream {
  StreamModel model = StreamModel::EA;
  std::size_t n = 0;
  std::vector<StreamEvent> events;

  friend bool operator==(const Stream&, const Stream&) = default;
};

struct StreamViolation {
  std::size_t event_index;
  std::string message;
};

class MalformedStream : public std::runtime_error {
 public:
  explicit MalformedStream(const StreamViolation& v)
      : std::runtime_error("event " + std::to_string(v.event_index) + ": " + v.message),
        violation_(v) {}
  const StreamViolation& violation() const noexcept { return violation_; }

 private:
  StreamViolation violation_;
};

/// First violation of the model invariants, or nullopt when well formed.
std::optional<StreamViolation> validate(const Stream& s);
/// Throws MalformedStream when `validate` finds a violation.
void require_valid(const Stream& s);

/// Final live graph. Throws MalformedStream on invalid input.
Graph replay(const Stream& s);

/// Builds a stream whose replay is `g`. `vertex_order` drives VA/AL exposure
/// order; `seed` shuffles EA/DEA edge order and within-exposure edge order.
Stream graph_to_stream(const Graph& g, StreamModel model, std::span<const Vertex> vertex_order,
                       std::uint64_t seed);
/// Same with the identity vertex order.
Stream graph_to_stream(const Graph& g, StreamModel model, std::uint64_t seed);

/// DEA stream for `g` that also inserts and later deletes `decoys` non-edges
/// of g, interleaved at random positions.
Stream dea_with_deletions(const Graph& g, std::size_t decoys, std::uint64_t seed);

/// Reinterprets an EA stream as a DEA stream of inserts.
Stream ea_as_dea(const Stream& s);

// Wire format: header lines "model <EA|DEA|VA|AL>" and "n <count>", then one
// event per line. EA "e u v"; DEA "+ u v" / "- u v"; VA/AL "x v : u1 u2 ...".
// Ids are 1-based on the wire.
Stream read_stream(std::istream& in);
Stream read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const Stream& s);

}  // namespace gsf
