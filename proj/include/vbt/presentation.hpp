#pragma once

#include <array>
#include <string>
#include <vector>

#include "vbt/smith.hpp"
#include "vbt/surface.hpp"
#include "vbt/words.hpp"

namespace vbt {

// One defining relator: a freely reduced word of signed 1-based generator
// indices, a kind tag ("co", "br", "tr", "rec", "cyc", "sq"), and a short
// human-readable note naming the operands.
struct Relator {
  Word word;
  std::string kind;
  std::string note;

  bool operator==(const Relator&) const = default;
};

struct GroupPresentation {
  std::vector<std::string> generators;
  // Optional decoration endpoints per generator ({0,0} = not known); used by
  // the permutation quotient.  Either empty or one entry per generator.
  std::vector<std::array<int, 2>> endpoints;
  std::vector<Relator> relators;

  int generator_index(const std::string& name) const; // 1-based; throws
  void validate() const;                               // throws ValidationError
};

// Relator word builders (operands may be words, e.g. expanded conjugates).
Word co_word(const Word& a, const Word& b); // a b = b a
Word br_word(const Word& a, const Word& b); // a b a = b a b
// Cyclic relation on a_1..a_m: the m-1 words
// (a_i...a_{i+2m-3})(a_{i+1}...a_{i+2m-2})^-1 with cyclic indices.
std::vector<Word> cyclic_words(const std::vector<Word>& cycle);

// Standard presentation of the braid twist group of the punctured model:
// generators s1..s{aleph-1}, t1..tK with K = 2g + b + p - 1.
GroupPresentation bt_presentation_punctured(const MarkedSurfaceSpec& spec);

// Vortex model: the above plus one commutation t_r t_{r-1} per vortex
// (t_0 := s_1).
GroupPresentation bt_presentation_vortex(const MarkedSurfaceSpec& spec);

// Alternative presentation over the arc chain of a flat vortexed disk
// (genus 0, one boundary component, p >= 1): generators s1, x1.., y1.., u1..
// (u_r = conjugated t_r), relators read off the arc configuration.
// `partition` gives the marked points per boundary component; for one
// boundary component it must be {aleph - 2p} with a positive entry.
GroupPresentation bt_presentation_alternative(const MarkedSurfaceSpec& spec,
                                              const std::vector<int>& partition);

// Named closed arcs with decoration endpoints plus incidence facts; the
// relation table turns it into relators.
struct ArcConfiguration {
  struct Arc {
    std::string name;
    int v0 = 0, v1 = 0; // decoration indices, 1-based
  };
  std::vector<Arc> arcs;
  std::vector<std::array<int, 3>> triangles;   // clockwise triples (arc indices, 0-based)
  std::vector<std::array<int, 4>> rectangles;  // anticlockwise vortex rectangles

  void validate() const; // facts mutually consistent
};

// Pairs -> Co (disjoint or digon) / Br (one shared endpoint); triples -> Tr;
// rectangles -> Rec.  Words are indexed by arc position (1-based).
std::vector<Relator> relations_from_arc_configuration(const ArcConfiguration& cfg);

// Adds g^2 = 1 for every generator (idempotent).
GroupPresentation weyl_quotient(const GroupPresentation& p);

// Smith invariants of the relator exponent matrix.
AbelianGroupInvariants abelianization(const GroupPresentation& p);

// Text: one relator per line, names space-separated, trailing apostrophe for
// an inverse letter.  JSON mirrors the fields.
std::string export_text(const GroupPresentation& p);
std::string export_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const std::string& text);

} // namespace vbt
