#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "vbt/errors.hpp"
#include "vbt/triangulation.hpp"

using namespace vbt;

namespace {

MarkedSurfaceSpec disk(int m, int p) {
  MarkedSurfaceSpec s;
  s.marked_per_boundary = {m};
  s.punctures = p;
  return s;
}

// Endpoint pair {role-tagged ids} of the arc with a label, as sorted vertex
// descriptors "m3" / "p1".
std::multiset<std::string> arc_ends(const Triangulation& t, int label) {
  const TriEdge& e = t.edges[t.edge_of_arc(label)];
  auto name = [&](int v) {
    return (t.vertices[v].role == VertexRole::Marked ? "m" : "p") +
           std::to_string(t.vertices[v].index);
  };
  return {name(e.v0), name(e.v1)};
}

int folded_triangle_count(const Triangulation& t) {
  int c = 0;
  for (const auto& tr : t.triangles)
    if (tr.edge[0] == tr.edge[1] || tr.edge[1] == tr.edge[2] ||
        tr.edge[2] == tr.edge[0])
      ++c;
  return c;
}

} // namespace

TEST_CASE("hexagon seed is the fan at marked point 1") {
  auto t = seed_triangulation(disk(6, 0));
  CHECK(t.arc_count() == 3);
  CHECK(t.triangles.size() == 4);
  CHECK(arc_ends(t, 1) == std::multiset<std::string>{"m1", "m3"});
  CHECK(arc_ends(t, 2) == std::multiset<std::string>{"m1", "m4"});
  CHECK(arc_ends(t, 3) == std::multiset<std::string>{"m1", "m5"});
  CHECK(folded_triangle_count(t) == 0);
}

TEST_CASE("punctured-square seed nests the puncture at marked point 1") {
  auto t = seed_triangulation(disk(4, 1));
  CHECK(t.arc_count() == 4);
  CHECK(t.triangles.size() == 4);
  CHECK(arc_ends(t, 1) == std::multiset<std::string>{"m1", "m3"});
  CHECK(arc_ends(t, 2) == std::multiset<std::string>{"m1", "m4"});
  CHECK(arc_ends(t, 3) == std::multiset<std::string>{"m1", "m1"}); // loop
  CHECK(arc_ends(t, 4) == std::multiset<std::string>{"m1", "p1"});
  CHECK(folded_triangle_count(t) == 1);
  CHECK(t.signs == std::vector<int>{1});
}

TEST_CASE("two-puncture seeds chain connector loops") {
  auto t = seed_triangulation(disk(3, 2));
  CHECK(t.arc_count() == 6);
  CHECK(t.triangles.size() == 5);
  CHECK(folded_triangle_count(t) == 2);
  // Arcs: chord, two folded pairs, one connector loop.
  CHECK(arc_ends(t, 1) == std::multiset<std::string>{"m1", "m3"});
  CHECK(arc_ends(t, 2) == std::multiset<std::string>{"m1", "m1"});
  CHECK(arc_ends(t, 3) == std::multiset<std::string>{"m1", "p1"});
  CHECK(arc_ends(t, 4) == std::multiset<std::string>{"m1", "m1"});
  CHECK(arc_ends(t, 5) == std::multiset<std::string>{"m1", "p2"});
  CHECK(arc_ends(t, 6) == std::multiset<std::string>{"m1", "m1"});

  auto t32 = seed_triangulation(disk(2, 3));
  CHECK(t32.arc_count() == 8);
  CHECK(t32.triangles.size() == 6);
  CHECK(folded_triangle_count(t32) == 3);
}

TEST_CASE("digon seed") {
  auto t = seed_triangulation(disk(2, 1));
  CHECK(t.arc_count() == 2);
  CHECK(t.triangles.size() == 2);
  CHECK(folded_triangle_count(t) == 1);
  CHECK(arc_ends(t, 1) == std::multiset<std::string>{"m1", "m1"});
  CHECK(arc_ends(t, 2) == std::multiset<std::string>{"m1", "p1"});
}

TEST_CASE("seed rejects unsupported surfaces") {
  MarkedSurfaceSpec torus;
  torus.genus = 1;
  torus.marked_per_boundary = {2};
  CHECK_THROWS_AS(seed_triangulation(torus), UnsupportedSurfaceError);

  MarkedSurfaceSpec annulus;
  annulus.marked_per_boundary = {3, 1};
  CHECK_THROWS_AS(seed_triangulation(annulus), UnsupportedSurfaceError);

  CHECK_THROWS_AS(seed_triangulation(disk(3, 0)), UnsupportedSurfaceError);
  CHECK_THROWS_AS(seed_triangulation(disk(2, 0)), UnsupportedSurfaceError);
}

TEST_CASE("hexagon flip replaces (1,3) by (2,4) and is an involution") {
  auto t = seed_triangulation(disk(6, 0));
  auto f = flip(t, 1);
  CHECK(arc_ends(f, 1) == std::multiset<std::string>{"m2", "m4"});
  CHECK(arc_ends(f, 2) == std::multiset<std::string>{"m1", "m4"});
  CHECK_FALSE(is_equivalent(t, f));
  for (int label : t.arc_labels()) {
    auto twice = flip(flip(t, label), label);
    CHECK(is_equivalent(t, twice));
  }
}

TEST_CASE("flip keeps labels and flips exactly one arc") {
  auto t = seed_triangulation(disk(7, 0));
  for (int label : t.arc_labels()) {
    auto f = flip(t, label);
    CHECK(f.arc_labels() == t.arc_labels());
    int moved = 0;
    for (int l : t.arc_labels())
      if (arc_ends(f, l) != arc_ends(t, l)) ++moved;
    CHECK(moved == 1);
  }
}

TEST_CASE("flipping the loop of a folded pair yields two radii") {
  auto t = seed_triangulation(disk(4, 1));
  auto f = flip(t, 3); // the loop
  CHECK(folded_triangle_count(f) == 0);
  CHECK(arc_ends(f, 3) == std::multiset<std::string>{"m4", "p1"});
  CHECK(arc_ends(f, 4) == std::multiset<std::string>{"m1", "p1"});
  CHECK(f.signs == std::vector<int>{1}); // generic flip keeps the sign
  CHECK(is_equivalent(flip(f, 3), t));   // exact involution here
}

TEST_CASE("flipping a folded edge toggles the sign and trades labels") {
  auto t = seed_triangulation(disk(4, 1));
  auto f = flip(t, 4); // the folded radius
  CHECK(folded_triangle_count(f) == 0);
  CHECK(f.signs == std::vector<int>{-1});
  // The requested label travelled to the new arc; the old radius kept the
  // loop's label.
  CHECK(arc_ends(f, 4) == std::multiset<std::string>{"m4", "p1"});
  CHECK(arc_ends(f, 3) == std::multiset<std::string>{"m1", "p1"});
  auto back = flip(f, 4);
  CHECK(folded_triangle_count(back) == 1);
  CHECK(back.signs == std::vector<int>{-1});
  CHECK(is_equivalent(back, t)); // sign differs only inside the folded pair
}

TEST_CASE("digon: four alternating flips close exactly") {
  auto t = seed_triangulation(disk(2, 1));
  auto code0 = canonical_form(t);
  std::vector<CanonicalCode> seen{code0};
  auto cur = t;
  for (int step = 0; step < 4; ++step) {
    cur = flip(cur, step % 2 == 0 ? 2 : 1);
    seen.push_back(canonical_form(cur));
  }
  CHECK(seen[4] == code0);
  std::set<CanonicalCode> distinct(seen.begin(), seen.end());
  CHECK(distinct.size() == 4); // the full digon exchange graph
}

TEST_CASE("signed equivalence identifies folded signs but not free signs") {
  auto plus = seed_triangulation(disk(2, 1));
  MarkedSurfaceSpec neg = disk(2, 1);
  neg.vortex_signs = {-1};
  auto minus = seed_triangulation(neg);
  CHECK(is_equivalent(plus, minus)); // sign sits inside a folded pair

  auto radii_plus = flip(plus, 1);   // flip the loop: sign stays +1
  auto radii_minus = flip(minus, 1); // sign stays -1, now unprotected
  CHECK(radii_plus.signs == std::vector<int>{1});
  CHECK(radii_minus.signs == std::vector<int>{-1});
  CHECK_FALSE(is_equivalent(radii_plus, radii_minus));
}

TEST_CASE("canonical code is stable and label-blind") {
  auto t = seed_triangulation(disk(4, 1));
  CHECK(canonical_form(t) == canonical_form(t));
  // Relabel two arcs of the same combinatorial type: does not change the code
  // only when the swap is an automorphism of the labeled structure; swapping
  // loop and folded labels plus the sign is the defining equivalence.
  auto u = t;
  std::swap(u.edges[u.edge_of_arc(3)].label, u.edges[u.edge_of_arc(4)].label);
  u.signs[0] = -1;
  u.spec.vortex_signs = u.signs;
  CHECK(is_equivalent(t, u));
}

TEST_CASE("comparing triangulations of different surfaces throws") {
  auto a = seed_triangulation(disk(6, 0));
  auto b = seed_triangulation(disk(4, 1));
  CHECK_THROWS_AS(is_equivalent(a, b), ValidationError);
}

TEST_CASE("JSON round trip is byte-stable") {
  for (auto spec : {disk(6, 0), disk(4, 1), disk(3, 2)}) {
    auto t = seed_triangulation(spec);
    auto text = to_json(t);
    auto back = triangulation_from_json(text);
    CHECK(to_json(back) == text);
    CHECK(back.spec.genus == 0);
    CHECK(back.spec.marked_per_boundary == spec.marked_per_boundary);
    CHECK(back.spec.punctures == spec.punctures);
    CHECK(canonical_form(back) == canonical_form(t));

    auto f = flip(t, 1);
    auto ftext = to_json(f);
    CHECK(to_json(triangulation_from_json(ftext)) == ftext);
  }
}

TEST_CASE("JSON reconstruction recovers corner structure") {
  auto t = seed_triangulation(disk(4, 1));
  auto back = triangulation_from_json(to_json(t));
  CHECK(back.vertices.size() == t.vertices.size());
  CHECK(folded_triangle_count(back) == 1);
  CHECK(back.signs == t.signs);
  // Same arcs by endpoints.
  for (int l : t.arc_labels()) CHECK(arc_ends(back, l) == arc_ends(t, l));
}

TEST_CASE("JSON rejects malformed inputs") {
  CHECK_THROWS_AS(triangulation_from_json("{"), ValidationError);
  CHECK_THROWS_AS(triangulation_from_json("{}"), ValidationError);
  CHECK_THROWS_AS(
      triangulation_from_json(
          R"({"triangles":[[0,1,2]],"edges":[{"half_edges":[0],"kind":"arc","label":1}]})"),
      ValidationError);
  // Boundary edge used on side 1.
  CHECK_THROWS_AS(
      triangulation_from_json(
          R"({"triangles":[[1,2,4]],"edges":[{"half_edges":[0],"kind":"boundary","label":1},{"half_edges":[2],"kind":"boundary","label":2},{"half_edges":[4,5],"kind":"arc","label":1}]})"),
      ValidationError);
}

TEST_CASE("tagged model of the digon") {
  auto plus = seed_triangulation(disk(2, 1));
  auto tt = to_tagged(plus);
  REQUIRE(tt.arcs.size() == 2);
  // Label 1 is the loop: it becomes the notched radius; label 2 stays plain.
  CHECK(tt.arcs[0].label == 1);
  CHECK(tt.arcs[0].tags == std::array<int, 2>{1, -1});
  CHECK(tt.arcs[1].label == 2);
  CHECK(tt.arcs[1].tags == std::array<int, 2>{1, 1});
  // Both tagged arcs run from marked point 1 to the puncture.
  for (const auto& arc : tt.arcs) {
    CHECK(tt.carrier.vertices[arc.ends[0]].role == VertexRole::Marked);
    CHECK(tt.carrier.vertices[arc.ends[1]].role == VertexRole::Puncture);
  }

  MarkedSurfaceSpec neg = disk(2, 1);
  neg.vortex_signs = {-1};
  auto mt = to_tagged(seed_triangulation(neg));
  // Equivalent signed triangulations give the same tagged pair with the
  // label correspondence crossed inside the folded pair.
  CHECK(mt.arcs[0].tags == std::array<int, 2>{1, 1});
  CHECK(mt.arcs[1].tags == std::array<int, 2>{1, -1});
  CHECK(is_equivalent(from_tagged(mt), from_tagged(tt)));
}

TEST_CASE("uniformly notched puncture encodes a -1 sign") {
  MarkedSurfaceSpec neg = disk(2, 1);
  neg.vortex_signs = {-1};
  auto radii = flip(seed_triangulation(neg), 1);
  auto tt = to_tagged(radii);
  REQUIRE(tt.arcs.size() == 2);
  CHECK(tt.arcs[0].tags[1] == -1);
  CHECK(tt.arcs[1].tags[1] == -1);
  CHECK(from_tagged(tt).signs == std::vector<int>{-1});
}

TEST_CASE("tagged rotation moves exactly one tagged arc") {
  auto t = seed_triangulation(disk(4, 1));
  auto tt = to_tagged(t);
  auto rot = tagged_rotation(tt, 4); // rotate the plain radius
  REQUIRE(rot.arcs.size() == 4);
  // The notched radius (label 3) is untouched as a tagged arc; label 4 moved
  // to a radius at marked point 4, now notched.
  auto before = tt.arcs[2];
  auto after = rot.arcs[2];
  CHECK(before.label == 3);
  CHECK(after.label == 3);
  CHECK(tt.carrier.vertices[before.ends[0]].index ==
        rot.carrier.vertices[after.ends[0]].index);
  CHECK(before.tags == after.tags);
  CHECK(rot.arcs[3].tags[1] == -1);
  CHECK(rot.carrier.vertices[rot.arcs[3].ends[0]].index == 4);

  // Rotation at an unpunctured arc is the plain flip.
  auto rot1 = tagged_rotation(tt, 1);
  CHECK(is_equivalent(rot1.carrier, flip(t, 1)));
}

TEST_CASE("four tagged rotations around the digon") {
  auto tt = to_tagged(seed_triangulation(disk(2, 1)));
  auto cur = tt;
  for (int step = 0; step < 4; ++step)
    cur = tagged_rotation(cur, step % 2 == 0 ? 2 : 1);
  CHECK(is_equivalent(cur.carrier, tt.carrier));
  REQUIRE(cur.arcs.size() == tt.arcs.size());
  for (std::size_t i = 0; i < tt.arcs.size(); ++i) {
    CHECK(cur.arcs[i].label == tt.arcs[i].label);
    CHECK(cur.arcs[i].tags == tt.arcs[i].tags);
  }
}

TEST_CASE("from_tagged validates tag compatibility") {
  auto tt = to_tagged(flip(seed_triangulation(disk(4, 1)), 3)); // two radii
  tt.arcs[2].tags[1] = -1; // notch one of two plain radii at the puncture
  CHECK_THROWS_AS(from_tagged(tt), ValidationError);
}

TEST_CASE("validate rejects corrupted structures") {
  auto t = seed_triangulation(disk(6, 0));
  auto bad = t;
  bad.triangles[0].vert[0] = 5; // slot no longer matches edge endpoints
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  auto dup = t;
  dup.edges[dup.edge_of_arc(2)].label = 1;
  CHECK_THROWS_AS(dup.validate(), ValidationError);

  auto signless = seed_triangulation(disk(4, 1));
  signless.signs.clear();
  CHECK_THROWS_AS(signless.validate(), ValidationError);
}
