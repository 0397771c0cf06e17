#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vbt/errors.hpp"
#include "vbt/triangulation.hpp"

namespace vbt {

// Flip closure of a seed triangulation.  Vertices are keyed by canonical
// code and hold the first-discovered representative; every vertex carries
// one directed out-edge per arc label of that representative.
struct ExchangeGraph {
  struct Edge {
    CanonicalCode src;
    int label = 0;
    CanonicalCode dst;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::map<CanonicalCode, Triangulation> vertices;
  std::vector<Edge> edges;
};

// Enumeration ran into the vertex limit; carries everything found so far.
class PartialGraphError : public Error {
 public:
  PartialGraphError(const std::string& what, ExchangeGraph partial)
      : Error(what), partial_(std::move(partial)) {}

  const ExchangeGraph& partial() const { return partial_; }

 private:
  ExchangeGraph partial_;
};

// Breadth-first closure under flips.  The result is deterministic for every
// worker count: frontiers are kept sorted and expansion results are merged
// in frontier order.
ExchangeGraph enumerate_exchange_graph(const Triangulation& seed,
                                       std::size_t vertex_limit = 100000,
                                       int threads = 1);

enum class CycleKind { Square1, Square2, Square3, Pentagon, Hexagon };

std::string cycle_kind_name(CycleKind kind);
int cycle_length(CycleKind kind);

// Local shape of an arc pair: Square1 share no triangle, Pentagon share one
// plain triangle, Square3 form a self-folded triangle, Square2 share two
// triangles around a common puncture, Hexagon share two triangles along an
// annulus.
CycleKind classify_pair(const Triangulation& t, int arc_i, int arc_j);

struct RelationCycle {
  CycleKind kind = CycleKind::Square1;
  // Code reached and label flipped, one entry per step.
  std::vector<std::pair<CanonicalCode, int>> steps;
};

// Walks the alternating flip cycle of the classified kind from t and checks
// that it stays inside the graph and closes.
RelationCycle verify_groupoid_cycle(const ExchangeGraph& graph,
                                    const Triangulation& t, int arc_i,
                                    int arc_j);

std::string export_dot(const ExchangeGraph& graph);
std::string export_json(const ExchangeGraph& graph);
ExchangeGraph exchange_graph_from_json(const std::string& text);

}  // namespace vbt
