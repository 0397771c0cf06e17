#include "vbt/exchange_graph.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace vbt {

namespace {

struct Expansion {
  int label = 0;
  CanonicalCode code;
  Triangulation child;
};

void expand_range(const ExchangeGraph& graph,
                  const std::vector<CanonicalCode>& frontier, std::size_t lo,
                  std::size_t hi, std::vector<std::vector<Expansion>>& out) {
  for (std::size_t idx = lo; idx < hi; ++idx) {
    const Triangulation& rep = graph.vertices.at(frontier[idx]);
    for (int label : rep.arc_labels()) {
      Expansion e;
      e.label = label;
      e.child = flip(rep, label);
      e.code = canonical_form(e.child);
      out[idx].push_back(std::move(e));
    }
  }
}

bool edge_less(const ExchangeGraph::Edge& a, const ExchangeGraph::Edge& b) {
  return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
}

}  // namespace

ExchangeGraph enumerate_exchange_graph(const Triangulation& seed,
                                       std::size_t vertex_limit, int threads) {
  if (vertex_limit < 1)
    throw ValidationError("vertex_limit must be at least 1");
  if (threads < 1) threads = 1;

  ExchangeGraph graph;
  CanonicalCode seed_code = canonical_form(seed);
  graph.vertices.emplace(seed_code, seed);
  std::vector<CanonicalCode> frontier{seed_code};

  while (!frontier.empty()) {
    std::vector<std::vector<Expansion>> out(frontier.size());
    std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads),
                              frontier.size());
    if (workers <= 1) {
      expand_range(graph, frontier, 0, frontier.size(), out);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (frontier.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(frontier.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(expand_range, std::cref(graph), std::cref(frontier),
                          lo, hi, std::ref(out));
      }
      for (std::thread& worker : pool) worker.join();
    }

    std::vector<CanonicalCode> next;
    for (std::size_t idx = 0; idx < frontier.size(); ++idx) {
      for (Expansion& e : out[idx]) {
        graph.edges.push_back({frontier[idx], e.label, e.code});
        if (graph.vertices.count(e.code)) continue;
        if (graph.vertices.size() >= vertex_limit) {
          std::sort(graph.edges.begin(), graph.edges.end(), edge_less);
          throw PartialGraphError("vertex limit reached before closure",
                                  std::move(graph));
        }
        graph.vertices.emplace(e.code, std::move(e.child));
        next.push_back(e.code);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  std::sort(graph.edges.begin(), graph.edges.end(), edge_less);
  return graph;
}

std::string cycle_kind_name(CycleKind kind) {
  switch (kind) {
    case CycleKind::Square1: return "square1";
    case CycleKind::Square2: return "square2";
    case CycleKind::Square3: return "square3";
    case CycleKind::Pentagon: return "pentagon";
    case CycleKind::Hexagon: return "hexagon";
  }
  throw ValidationError("unknown cycle kind");
}

int cycle_length(CycleKind kind) {
  switch (kind) {
    case CycleKind::Square1:
    case CycleKind::Square2:
    case CycleKind::Square3: return 4;
    case CycleKind::Pentagon: return 5;
    case CycleKind::Hexagon: return 6;
  }
  throw ValidationError("unknown cycle kind");
}

CycleKind classify_pair(const Triangulation& t, int arc_i, int arc_j) {
  if (arc_i == arc_j)
    throw ValidationError("classify_pair needs two distinct arcs");
  int ei = t.edge_of_arc(arc_i);
  int ej = t.edge_of_arc(arc_j);

  auto is_sf = [&t](int ti) {
    const Triangle& tr = t.triangles[ti];
    return tr.edge[0] == tr.edge[1] || tr.edge[1] == tr.edge[2] ||
           tr.edge[2] == tr.edge[0];
  };

  for (int ti = 0; ti < static_cast<int>(t.triangles.size()); ++ti) {
    if (!is_sf(ti)) continue;
    const Triangle& tr = t.triangles[ti];
    auto has = [&tr](int e) {
      return tr.edge[0] == e || tr.edge[1] == e || tr.edge[2] == e;
    };
    if (has(ei) && has(ej)) return CycleKind::Square3;
  }

  // Adjacency in the tagged sense: a folded edge borrows its loop's plain
  // triangles, and the self-folded triangle itself never counts.
  auto plain_triangles = [&](int e) {
    int carrier = e;
    if (t.is_folded_edge(e))
      carrier = t.folded_pair_at(t.slots_of(e)[0].first).loop_edge;
    std::set<int> out;
    for (auto [ti, slot] : t.slots_of(carrier))
      if (!is_sf(ti)) out.insert(ti);
    return out;
  };

  std::set<int> tri_i = plain_triangles(ei);
  std::set<int> common;
  for (int ti : plain_triangles(ej))
    if (tri_i.count(ti)) common.insert(ti);

  if (common.empty()) return CycleKind::Square1;
  if (common.size() == 1) return CycleKind::Pentagon;
  if (common.size() == 2) {
    std::set<int> ends_i{t.edges[ei].v0, t.edges[ei].v1};
    for (int v : {t.edges[ej].v0, t.edges[ej].v1})
      if (ends_i.count(v) && t.vertices[v].role == VertexRole::Puncture)
        return CycleKind::Square2;
    return CycleKind::Hexagon;
  }
  throw ValidationError("arc pair shares more than two triangles");
}

RelationCycle verify_groupoid_cycle(const ExchangeGraph& graph,
                                    const Triangulation& t, int arc_i,
                                    int arc_j) {
  RelationCycle cycle;
  cycle.kind = classify_pair(t, arc_i, arc_j);

  CanonicalCode home = canonical_form(t);
  if (!graph.vertices.count(home))
    throw CounterexampleError("base triangulation is not a graph vertex");

  Triangulation cur = t;
  int len = cycle_length(cycle.kind);
  for (int step = 0; step < len; ++step) {
    int label = step % 2 == 0 ? arc_i : arc_j;
    cur = flip(cur, label);
    CanonicalCode code = canonical_form(cur);
    if (!graph.vertices.count(code))
      throw CounterexampleError("groupoid cycle leaves the enumerated graph");
    cycle.steps.emplace_back(std::move(code), label);
  }
  if (cycle.steps.back().first != home)
    throw CounterexampleError("groupoid " + cycle_kind_name(cycle.kind) +
                              " cycle fails to close");
  return cycle;
}

std::string export_dot(const ExchangeGraph& graph) {
  std::string out = "digraph exchange_graph {\n";
  for (const auto& [code, rep] : graph.vertices) {
    (void)rep;
    out += "  \"" + code_hex(code) + "\";\n";
  }
  for (const ExchangeGraph::Edge& e : graph.edges)
    out += "  \"" + code_hex(e.src) + "\" -> \"" + code_hex(e.dst) +
           "\" [label=" + std::to_string(e.label) + "];\n";
  out += "}\n";
  return out;
}

std::string export_json(const ExchangeGraph& graph) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::object();
  for (const auto& [code, rep] : graph.vertices)
    doc["vertices"][code_hex(code)] = nlohmann::json::parse(to_json(rep));
  doc["edges"] = nlohmann::json::array();
  for (const ExchangeGraph::Edge& e : graph.edges)
    doc["edges"].push_back(
        nlohmann::json::array({code_hex(e.src), e.label, code_hex(e.dst)}));
  return doc.dump(2) + "\n";
}

ExchangeGraph exchange_graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed graph document: ") +
                          e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ValidationError("graph document needs vertices and edges");

  ExchangeGraph graph;
  std::map<std::string, CanonicalCode> by_hex;
  for (const auto& [hex, body] : doc["vertices"].items()) {
    Triangulation t = triangulation_from_json(body.dump());
    CanonicalCode code = canonical_form(t);
    if (code_hex(code) != hex)
      throw ValidationError("vertex key does not match its triangulation");
    by_hex.emplace(hex, code);
    graph.vertices.emplace(std::move(code), std::move(t));
  }
  for (const nlohmann::json& entry : doc["edges"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
        !entry[1].is_number_integer() || !entry[2].is_string())
      throw ValidationError("edge entries are [source, label, target]");
    auto src = by_hex.find(entry[0].get<std::string>());
    auto dst = by_hex.find(entry[2].get<std::string>());
    if (src == by_hex.end() || dst == by_hex.end())
      throw ValidationError("edge references an unknown vertex");
    graph.edges.push_back({src->second, entry[1].get<int>(), dst->second});
  }
  return graph;
}

}  // namespace vbt
