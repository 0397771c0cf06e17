#pragma once

#include <string>
#include <vector>

#include "vbt/presentation.hpp"
#include "vbt/surface.hpp"

namespace vbt {

// Integer vector over the H1 basis of the punctured model: 2g genus loops
// followed by one loop per obstacle (holes 2..b first, then vortices).
struct AJVector {
  std::vector<long long> coords;

  bool is_zero() const;
  friend bool operator==(const AJVector&, const AJVector&) = default;
};

// The same class with every vortex coordinate reduced mod 2.
struct AJVortexClass {
  std::vector<long long> free_part;  // genus and hole coordinates
  std::vector<int> torsion_part;     // one Z/2 coordinate per vortex

  bool is_zero() const;
  friend bool operator==(const AJVortexClass&, const AJVortexClass&) = default;
};

// Table homomorphism on whitespace-separated class tokens with a trailing
// apostrophe for inverses: twist classes (s2, t1, u3, b4, x, y, x1, y2,
// Taurus c2) map to zero; e<t> and L<t> map to the basis vector of
// obstacle t.  Unknown names or out-of-range indices are rejected.
AJVector aj(const MarkedSurfaceSpec& spec, const std::string& word);
AJVortexClass aj_vortex(const MarkedSurfaceSpec& spec,
                        const std::string& word);

// AJ value of a presentation relator (its letters name twist classes).
AJVector aj_of_relator(const MarkedSurfaceSpec& spec,
                       const GroupPresentation& p, const Word& relator);

// perm[i-1] = image of i.
using PermutationImage = std::vector<int>;

bool is_identity(const PermutationImage& perm);

// Product of the endpoint transpositions of the word's letters, rightmost
// letter applied first.  Every letter must carry two distinct endpoints.
PermutationImage permutation_quotient(const GroupPresentation& p,
                                      const Word& word);

}  // namespace vbt
