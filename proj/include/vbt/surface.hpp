#pragma once

#include <string>
#include <vector>

#include "vbt/errors.hpp"

namespace vbt {

// Invariants of a finitely generated abelian group.
struct AbelianGroupInvariants {
  int free_rank = 0;
  std::vector<long long> torsion; // elementary divisors >= 2, each divides next

  bool operator==(const AbelianGroupInvariants&) const = default;
};

// A marked surface with vortices: genus g, b >= 1 boundary components with
// m_i >= 1 marked points each, p interior punctures each carrying a sign.
struct MarkedSurfaceSpec {
  int genus = 0;
  std::vector<int> marked_per_boundary; // size b
  int punctures = 0;
  std::vector<int> vortex_signs; // size p, entries +1/-1; empty = all +1

  int boundary_count() const { return static_cast<int>(marked_per_boundary.size()); }
  int marked_total() const;
  int vortex_sign(int index) const; // 1-based puncture index

  void validate() const; // throws ValidationError
};

// n = 6g + 3p + 3b + m - 6: number of arcs in any triangulation.
int rank(const MarkedSurfaceSpec& spec);

// aleph = 4g + 2p + 2b + m - 4 = (2n + m)/3: number of decorations.
int decoration_count(const MarkedSurfaceSpec& spec);

// H1 of the punctured surface: free of rank 2g + b - 1 + p.
AbelianGroupInvariants h1_punctured(const MarkedSurfaceSpec& spec);

// H1 of the vortex surface: free rank 2g + b - 1 plus p copies of Z/2.
AbelianGroupInvariants h1_vortex(const MarkedSurfaceSpec& spec);

// JSON I/O: {"genus":g,"boundary":[m_1,...],"punctures":p,"vortex_signs":[...]}.
std::string to_json(const MarkedSurfaceSpec& spec);
MarkedSurfaceSpec surface_from_json(const std::string& text);

} // namespace vbt
