#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracle_arc_sets.hpp"
#include "vbt/errors.hpp"
#include "vbt/exchange_graph.hpp"
#include "vbt/triangulation.hpp"

using namespace vbt;

namespace {

MarkedSurfaceSpec disk(int m, int p) {
  MarkedSurfaceSpec s;
  s.marked_per_boundary = {m};
  s.punctures = p;
  return s;
}

ExchangeGraph graph_of(int m, int p, int threads = 1) {
  return enumerate_exchange_graph(seed_triangulation(disk(m, p)), 100000,
                                  threads);
}

// Runs verify_groupoid_cycle for every vertex and unordered arc pair and
// returns how many cycles of each kind were closed.
std::map<CycleKind, int> sweep_cycles(const ExchangeGraph& g) {
  std::map<CycleKind, int> kinds;
  for (const auto& [code, rep] : g.vertices) {
    auto labels = rep.arc_labels();
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        RelationCycle cycle =
            verify_groupoid_cycle(g, rep, labels[a], labels[b]);
        ++kinds[cycle.kind];
      }
  }
  return kinds;
}

}  // namespace

TEST_CASE("disk exchange graphs match the clique oracle") {
  for (int m = 5; m <= 8; ++m) {
    auto g = graph_of(m, 0);
    CHECK(g.vertices.size() == oracle::disk_triangulation_count(m));
    CHECK(g.vertices.size() == oracle::catalan(m - 2));
  }
}

TEST_CASE("once-punctured exchange graphs match the tagged oracle") {
  for (int m = 2; m <= 5; ++m) {
    auto g = graph_of(m, 1);
    CHECK(g.vertices.size() == oracle::punctured_disk_tagged_count(m));
    CHECK(g.vertices.size() == oracle::punctured_disk_closed_form(m));
  }
}

TEST_CASE("every vertex carries one out-edge per arc label") {
  for (auto [m, p] : {std::pair{6, 0}, std::pair{4, 1}}) {
    auto g = graph_of(m, p);
    int n = static_cast<int>(g.vertices.begin()->second.arc_count());
    std::map<CanonicalCode, std::set<int>> labels_at;
    for (const auto& e : g.edges) {
      CHECK(g.vertices.count(e.src));
      CHECK(g.vertices.count(e.dst));
      CHECK(labels_at[e.src].insert(e.label).second);  // no repeated label
    }
    CHECK(labels_at.size() == g.vertices.size());
    for (const auto& [code, labels] : labels_at)
      CHECK(static_cast<int>(labels.size()) == n);
  }
}

TEST_CASE("digon graph is the four-vertex cycle with doubled edges") {
  auto g = graph_of(2, 1);
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 8);
  for (const auto& e : g.edges) CHECK(e.src != e.dst);

  // Undirected support: every out-edge is matched by a reverse edge.
  std::set<std::pair<CanonicalCode, CanonicalCode>> arrows;
  for (const auto& e : g.edges) arrows.insert({e.src, e.dst});
  for (const auto& [src, dst] : arrows) CHECK(arrows.count({dst, src}));
}

TEST_CASE("pair classification on the hexagon fan and the digon") {
  auto hexagon = seed_triangulation(disk(6, 0));
  CHECK(classify_pair(hexagon, 1, 3) == CycleKind::Square1);
  CHECK(classify_pair(hexagon, 1, 2) == CycleKind::Pentagon);
  CHECK(classify_pair(hexagon, 2, 3) == CycleKind::Pentagon);

  auto digon = seed_triangulation(disk(2, 1));
  CHECK(classify_pair(digon, 1, 2) == CycleKind::Square3);

  // Two radii at the puncture share both of their triangles.
  auto radii = flip(digon, 1);
  CHECK(classify_pair(radii, 1, 2) == CycleKind::Square2);

  // The folded edge borrows its loop's adjacencies: on the once-punctured
  // triangle the chord meets the loop and hence also its folded partner.
  auto punct = seed_triangulation(disk(3, 1));
  CHECK(classify_pair(punct, 1, 2) == CycleKind::Pentagon);
  CHECK(classify_pair(punct, 1, 3) == CycleKind::Pentagon);
  CHECK(classify_pair(punct, 2, 3) == CycleKind::Square3);

  CHECK_THROWS_AS(classify_pair(hexagon, 1, 1), ValidationError);
}

TEST_CASE("groupoid cycles close for every pair on small graphs") {
  auto pentagon_kinds = sweep_cycles(graph_of(5, 0));
  CHECK(pentagon_kinds[CycleKind::Pentagon] > 0);
  CHECK(pentagon_kinds[CycleKind::Square3] == 0);
  CHECK(pentagon_kinds[CycleKind::Square2] == 0);

  auto digon_kinds = sweep_cycles(graph_of(2, 1));
  // sf vertices give Square3, radii vertices give Square2, one pair each.
  CHECK(digon_kinds[CycleKind::Square3] == 2);
  CHECK(digon_kinds[CycleKind::Square2] == 2);

  auto punct_kinds = sweep_cycles(graph_of(3, 1));
  CHECK(punct_kinds[CycleKind::Pentagon] > 0);
  CHECK(punct_kinds[CycleKind::Square3] > 0);
}

TEST_CASE("pentagon cycle walks five flips and returns") {
  auto hexagon = seed_triangulation(disk(6, 0));
  auto g = graph_of(6, 0);
  RelationCycle cycle = verify_groupoid_cycle(g, hexagon, 1, 2);
  CHECK(cycle.kind == CycleKind::Pentagon);
  CHECK(cycle.steps.size() == 5);
  CHECK(cycle.steps.back().first == canonical_form(hexagon));
  // Intermediate stops are genuine distinct moves.
  std::set<CanonicalCode> seen;
  for (const auto& [code, label] : cycle.steps) seen.insert(code);
  CHECK(seen.size() == 5);
}

TEST_CASE("cycle verification rejects foreign base points") {
  auto g = graph_of(5, 0);
  auto heptagon = seed_triangulation(disk(7, 0));
  CHECK_THROWS_AS(verify_groupoid_cycle(g, heptagon, 1, 2),
                  CounterexampleError);
}

TEST_CASE("vertex limit interrupts with the partial graph attached") {
  try {
    enumerate_exchange_graph(seed_triangulation(disk(6, 0)), 3);
    FAIL("expected PartialGraphError");
  } catch (const PartialGraphError& e) {
    CHECK(e.partial().vertices.size() == 3);
    CHECK(!e.partial().edges.empty());
  }
}

TEST_CASE("enumeration is deterministic across worker counts") {
  auto solo = graph_of(4, 1, 1);
  auto pooled = graph_of(4, 1, 4);
  CHECK(solo.vertices.size() == 50);
  CHECK(export_json(solo) == export_json(pooled));
  CHECK(export_dot(solo) == export_dot(pooled));
}

TEST_CASE("dot export lists every vertex and labeled edge") {
  auto g = graph_of(2, 1);
  std::string dot = export_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  std::size_t arrow_count = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 2))
    ++arrow_count;
  CHECK(arrow_count == g.edges.size());
  for (const auto& [code, rep] : g.vertices)
    CHECK(dot.find('"' + code_hex(code) + '"') != std::string::npos);
}

TEST_CASE("json export round-trips byte for byte") {
  for (auto [m, p] : {std::pair{5, 0}, std::pair{3, 1}}) {
    auto g = graph_of(m, p);
    std::string doc = export_json(g);
    ExchangeGraph back = exchange_graph_from_json(doc);
    CHECK(back.vertices.size() == g.vertices.size());
    CHECK(back.edges == g.edges);
    CHECK(export_json(back) == doc);
  }
}

TEST_CASE("graph documents with broken references are rejected") {
  CHECK_THROWS_AS(exchange_graph_from_json("[]"), ValidationError);
  CHECK_THROWS_AS(exchange_graph_from_json("{\"vertices\":{}}"),
                  ValidationError);

  auto g = graph_of(2, 1);
  std::string doc = export_json(g);
  // Rename one vertex key: the key no longer matches its triangulation.
  std::string key = code_hex(g.vertices.begin()->first);
  std::string broken = doc;
  broken.replace(broken.find(key), key.size(), std::string(key.size(), '0'));
  CHECK_THROWS_AS(exchange_graph_from_json(broken), ValidationError);
}
