#pragma once

#include <string>
#include <vector>

#include "vbt/errors.hpp"
#include "vbt/words.hpp"

namespace vbt {

// An automorphism of the free group on `rank` generators, given by the image
// word of each generator.
struct FreeAutomorphism {
  int rank = 0;
  std::vector<Word> img; // img[i] = image of generator i+1

  Word apply(const Word& w) const;
  bool is_identity() const;
  bool operator==(const FreeAutomorphism&) const = default;
};

FreeAutomorphism identity_automorphism(int rank);

// a after b: (compose(a,b))(w) = a(b(w)).
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b);

// A mapping class: an automorphism with its exact inverse tracked, so that
// group operations stay exact and cheap.
struct MappingClass {
  FreeAutomorphism fwd, bwd;

  int rank() const { return fwd.rank; }
  bool is_identity() const { return fwd.is_identity(); }
  bool operator==(const MappingClass& o) const { return fwd == o.fwd; }

  MappingClass inverse() const { return {bwd, fwd}; }
  MappingClass power(int k) const;
};

MappingClass identity_class(int rank);

// Product in the convention of the group presentations: in `mul(a, b)`,
// b acts first. A word w_1 w_2 ... w_k is evaluated by left-folding mul,
// so the rightmost factor acts first.
MappingClass mul(const MappingClass& a, const MappingClass& b);

// a^b = b^-1 a b.
MappingClass conjugate(const MappingClass& a, const MappingClass& b);

// [a, b] = a b a^-1 b^-1.
MappingClass commutator(const MappingClass& a, const MappingClass& b);

// Evaluate a product of (class, exponent) factors, rightmost first.
MappingClass eval_product(int rank,
                          const std::vector<std::pair<MappingClass, int>>& items);

// Verify that fwd and bwd are mutually inverse; throws ValidationError.
void check_inverse_pair(const MappingClass& m);

// The half twist exchanging linear positions j, j+1 (1-based) of the free
// group on `rank` generators: g_j -> g_j g_{j+1} g_j^-1, g_{j+1} -> g_j.
// e = -1 gives the inverse twist.
MappingClass half_twist(int rank, int j, int e = 1);

// The Dehn twist along a curve enclosing the contiguous positions a..b.
// o = -1 gives the inverse twist.
MappingClass block_twist(int rank, int a, int b, int o = 1);

} // namespace vbt
