#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "vbt/surface.hpp"

namespace vbt {

// Signed triangulations as oriented combinatorial maps.  Triangles list their
// sides anticlockwise; slot k of a triangle traverses the side from vert[k]
// to vert[(k+1)%3].  Every arc occupies exactly two slots (both in the same
// triangle for the folded edge of a self-folded pair), every boundary segment
// exactly one.

enum class VertexRole { Marked, Puncture };
enum class EdgeKind { Arc, Boundary };

struct TriVertex {
  VertexRole role = VertexRole::Marked;
  int index = 0; // 1-based within its role
};

struct TriEdge {
  EdgeKind kind = EdgeKind::Arc;
  int label = 0; // arcs 1..n; boundary segments 1..m, consecutive per component
  int v0 = -1;   // endpoints as vertex ids; equal for loops
  int v1 = -1;
};

struct Triangle {
  std::array<int, 3> edge{}; // edge ids
  std::array<int, 3> vert{}; // vertex ids, anticlockwise corners
};

struct Triangulation {
  MarkedSurfaceSpec spec;
  std::vector<TriVertex> vertices;
  std::vector<TriEdge> edges;
  std::vector<Triangle> triangles;
  std::vector<int> signs; // one per puncture index, +1 or -1

  int arc_count() const;
  std::vector<int> arc_labels() const; // sorted ascending
  int edge_of_arc(int label) const;    // edge id; throws ValidationError
  int edge_of_boundary(int label) const;

  // Slots (triangle, slot) holding an edge, in scan order.
  std::vector<std::pair<int, int>> slots_of(int edge_id) const;

  // True iff both slots of the edge lie in one triangle (folded edge).
  bool is_folded_edge(int edge_id) const;

  // For a folded edge or its loop partner: ids {loop, folded, puncture vertex}.
  struct FoldedPair {
    int loop_edge;
    int folded_edge;
    int puncture_vertex;
    int triangle;
  };
  FoldedPair folded_pair_at(int triangle) const;

  // Puncture vertex ids enclosed in self-folded triangles.
  std::vector<int> folded_punctures() const;

  void validate() const; // throws ValidationError
};

// Fan-shaped base triangulation (genus 0, one boundary component); punctures
// are nested in self-folded pairs at marked point 1.
Triangulation seed_triangulation(const MarkedSurfaceSpec& spec);

// Flip the arc with the given label; the replacement arc inherits the label.
// At a folded edge this toggles the enclosed sign, exchanges the labels of
// the folded pair, and flips the loop.
Triangulation flip(const Triangulation& t, int arc_label);

// Canonical byte code of the equivalence class (labels ignored, signs at
// self-folded punctures normalized to +1): breadth-first traversal anchored
// at boundary segment 1.
using CanonicalCode = std::string;
CanonicalCode canonical_form(const Triangulation& t);
std::string code_hex(const CanonicalCode& code);

bool is_equivalent(const Triangulation& a, const Triangulation& b);

std::string to_json(const Triangulation& t);
Triangulation triangulation_from_json(const std::string& text);

// Tagged model: each arc keeps its label and carries a tag (+1 plain, -1
// notched) at each endpoint; the loop of a self-folded pair is traded for a
// second radius at the enclosed puncture with the opposite tag.
struct TaggedArc {
  int label = 0;
  std::array<int, 2> ends{}; // vertex ids in the carrier
  std::array<int, 2> tags{}; // +1 plain / -1 notched; marked ends always +1
  bool operator==(const TaggedArc&) const = default;
};

struct TaggedTriangulation {
  Triangulation carrier; // signed representative, folded signs +1
  std::vector<TaggedArc> arcs; // sorted by label
};

TaggedTriangulation to_tagged(const Triangulation& t);
Triangulation from_tagged(const TaggedTriangulation& tt);

// Rotation of one tagged arc = flip of the signed carrier at the same label.
TaggedTriangulation tagged_rotation(const TaggedTriangulation& tt, int arc_label);

} // namespace vbt
