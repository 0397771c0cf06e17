#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vbt/automorphism.hpp"
#include "vbt/surface.hpp"

namespace vbt {

// Planar verification model for a genus-0 surface: N = aleph + (b-1) + p
// special points on a line (decorations, then inner holes, then vortices);
// the fundamental group of the complement is free on one loop per point and
// mapping classes act as free-group automorphisms with exact inverses.
class TwistContext {
 public:
  explicit TwistContext(const MarkedSurfaceSpec& spec);

  const MarkedSurfaceSpec& spec() const { return spec_; }
  int free_rank() const { return rank_; }      // N
  int decorations() const { return aleph_; }   // aleph
  int obstacles() const { return obstacles_; } // (b-1) + p
  int holes() const { return holes_; }         // b-1

  // Elementary generators.
  MappingClass artin_half_twist(int j, int e = 1) const; // positions j, j+1
  MappingClass block(int a, int b, int o = 1) const;

  // Named classes of the presentations.
  const MappingClass& sigma(int i) const;   // 1 <= i <= aleph-1
  const MappingClass& tau(int r) const;     // 0 <= r <= obstacles; tau(0) = sigma(1)
  const MappingClass& epsilon(int t) const; // 0 <= t <= obstacles; epsilon(0) = id
  MappingClass l_delta(int r) const;        // epsilon_r epsilon_{r-1}^{-1}
  MappingClass taurus(int r) const;         // [tau_r, tau_{r-1}]
  MappingClass x() const;                   // sigma_2 sigma_1 sigma_2^{-1}
  MappingClass y() const;                   // sigma_2 sigma_3 sigma_2^{-1}

  // Collision twist along the standard path from the last decoration to
  // obstacle r (1-based), and its conjugate by an arbitrary mapping class.
  MappingClass collision_twist(int r) const;
  MappingClass conjugated_collision_twist(int r, const MappingClass& psi) const;

  // The two collision twists bounding the standard digon around obstacle r:
  // first.first = S1 (B_{eta1} = S1 S2 S1^-1 is tau_{r-1}),
  // first.second = S2 (B_{eta2} = S2 S1 S2^-1 is tau_r).
  std::pair<MappingClass, MappingClass> digon_pair(int r) const;

  // Independent point-push realization of L-twists: elementary push of the
  // first decoration around obstacle k - aleph at position k,
  MappingClass elementary_push(int k) const;
  // and the push along a loop word (letters = signed obstacle indices,
  // first letter traversed first).
  MappingClass push(const std::vector<int>& loop) const;

  // Evaluate a named word: tokens s<i>, t<r>, e<t>, L<r>, c<r> (commutator
  // [tau_r, tau_{r-1}]), x, y, B<r>, with trailing ' for inverse.
  MappingClass eval(const std::string& word) const;
  MappingClass named(const std::string& token) const;

 private:
  MarkedSurfaceSpec spec_;
  int aleph_ = 0, holes_ = 0, obstacles_ = 0, rank_ = 0;
  MappingClass m_; // the calibrated corridor word M
  mutable std::vector<MappingClass> sigma_, tau_, epsilon_;
};

} // namespace vbt
