#pragma once

#include <vector>

#include "vbt/surface.hpp"

namespace vbt {

using IntMatrix = std::vector<std::vector<long long>>;

// Smith normal form diagonal (nonnegative, each entry dividing the next) of
// an integer matrix, computed with exact Bezout row and column operations.
std::vector<long long> smith_diagonal(IntMatrix a);

// Invariants of coker(relations): Z^generators modulo the row space of the
// relations matrix (one row per relator, one column per generator).
AbelianGroupInvariants abelian_invariants(int generators, const IntMatrix& relations);

} // namespace vbt
