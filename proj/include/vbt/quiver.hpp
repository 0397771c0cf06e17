#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vbt/presentation.hpp"
#include "vbt/triangulation.hpp"

namespace vbt {

// Quiver on the arcs of a triangulation: vertices are the arc labels 1..n,
// arrows a sorted multiset of label pairs.  dual_endpoints records the two
// triangles (1-based) meeting each arc; a folded edge borrows the pair of
// its loop.
struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;
  std::map<int, std::array<int, 2>> dual_endpoints;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices == b.vertices && a.arrows == b.arrows;
  }
};

// One cyclic potential term, stored as its arrow cycle.
struct PotentialTerm {
  std::vector<std::pair<int, int>> arrows;

  friend bool operator==(const PotentialTerm&, const PotentialTerm&) = default;
};

struct QuiverWithPotential {
  Quiver quiver;
  std::vector<PotentialTerm> potential;
};

// Arrows clockwise inside each plain triangle, two-cycles cancelled, arrows
// at a loop duplicated onto its folded partner.
Quiver quiver_of(const Triangulation& t);

// Cyclic terms: one per internal plain triangle with three distinct arcs,
// one per puncture with at least three spokes; a term is kept only when its
// whole arrow cycle survived reduction.
std::vector<PotentialTerm> potential_of(const Triangulation& t,
                                        const Quiver& q);

QuiverWithPotential qp_of(const Triangulation& t);

// Fomin-Zelevinsky mutation at vertex k (an involution on reduced quivers).
Quiver mutate(const Quiver& q, int k);

// quiver_of(flip(t, label)) agrees with mutate(quiver_of(t), label).
bool check_flip_mutation(const Triangulation& t, int label);

std::string export_json(const QuiverWithPotential& qp);

// Cluster braid relators read off a quiver with potential: one generator per
// vertex, commutation or braid per pair by arrow count (parallel arrows are
// out of scope), one cyclic relation per potential term.
GroupPresentation cbr_presentation_from_qp(const QuiverWithPotential& qp);

}  // namespace vbt
