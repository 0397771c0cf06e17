#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_arc_sets.hpp"

// Frozen expected values.  These were produced by this brute-force counter
// before any library code existed and must never be edited to match the
// library; the library is tested against them, not the other way round.

TEST_CASE("disk triangulation counts for m = 5..8") {
  CHECK(oracle::disk_triangulation_count(5) == 5);
  CHECK(oracle::disk_triangulation_count(6) == 14);
  CHECK(oracle::disk_triangulation_count(7) == 42);
  CHECK(oracle::disk_triangulation_count(8) == 132);
}

TEST_CASE("disk counts agree with the Catalan numbers") {
  for (int m = 4; m <= 9; ++m)
    CHECK(oracle::disk_triangulation_count(m) == oracle::catalan(m - 2));
}

TEST_CASE("tagged triangulation counts of the once-punctured disk") {
  CHECK(oracle::punctured_disk_tagged_count(2) == 4); // punctured digon
  CHECK(oracle::punctured_disk_tagged_count(3) == 14);
  CHECK(oracle::punctured_disk_tagged_count(4) == 50);
  CHECK(oracle::punctured_disk_tagged_count(5) == 182);
}

TEST_CASE("punctured counts agree with the closed form") {
  for (int m = 2; m <= 6; ++m)
    CHECK(oracle::punctured_disk_tagged_count(m) ==
          oracle::punctured_disk_closed_form(m));
}

TEST_CASE("arc inventories have the expected sizes") {
  // m(m-2) chord classes and 2m tagged radii.
  CHECK(oracle::punctured_arcs(4).size() == 4 * 2 + 8);
  CHECK(oracle::punctured_arcs(5).size() == 5 * 3 + 10);
  CHECK(oracle::disk_chords(6).size() == 9);
}
