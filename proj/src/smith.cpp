#include "vbt/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "vbt/errors.hpp"

namespace vbt {

namespace {

long long checked(__int128 v) {
  if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
    throw ValidationError("integer overflow in Smith reduction");
  return static_cast<long long>(v);
}

// Extended gcd: returns g = gcd(a, b) and x, y with x*a + y*b = g, g >= 0.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

struct Reducer {
  IntMatrix& a;
  std::size_t rows, cols;

  // Left-multiply by the unimodular 2x2 Bezout block acting on rows i, k so
  // that a[i][t] becomes gcd and a[k][t] becomes zero.
  void bezout_rows(std::size_t i, std::size_t k, std::size_t t) {
    long long p = a[i][t], q = a[k][t];
    if (q == 0) return;
    long long x, y;
    long long g = ext_gcd(p, q, x, y);
    long long u = p / g, v = q / g;
    for (std::size_t j = 0; j < cols; ++j) {
      __int128 top = static_cast<__int128>(x) * a[i][j] +
                     static_cast<__int128>(y) * a[k][j];
      __int128 bot = static_cast<__int128>(u) * a[k][j] -
                     static_cast<__int128>(v) * a[i][j];
      a[i][j] = checked(top);
      a[k][j] = checked(bot);
    }
  }

  void bezout_cols(std::size_t j, std::size_t k, std::size_t t) {
    long long p = a[t][j], q = a[t][k];
    if (q == 0) return;
    long long x, y;
    long long g = ext_gcd(p, q, x, y);
    long long u = p / g, v = q / g;
    for (std::size_t i = 0; i < rows; ++i) {
      __int128 left = static_cast<__int128>(x) * a[i][j] +
                      static_cast<__int128>(y) * a[i][k];
      __int128 right = static_cast<__int128>(u) * a[i][k] -
                       static_cast<__int128>(v) * a[i][j];
      a[i][j] = checked(left);
      a[i][k] = checked(right);
    }
  }

  bool find_pivot(std::size_t t) {
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          std::swap(a[t], a[i]);
          if (j != t)
            for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][t], a[r][j]);
          return true;
        }
    return false;
  }

  // Zero out row t and column t beyond the pivot.  When the pivot divides an
  // entry we use plain elimination, which leaves the pivot's own row/column
  // untouched; otherwise a Bezout step strictly shrinks |pivot|, so the outer
  // loop terminates.
  void clear_cross(std::size_t t) {
    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        if (a[i][t] % a[t][t] == 0) {
          long long c = a[i][t] / a[t][t];
          for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = checked(static_cast<__int128>(a[i][j]) -
                              static_cast<__int128>(c) * a[t][j]);
        } else {
          bezout_rows(t, i, t);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        if (a[t][j] % a[t][t] == 0) {
          long long c = a[t][j] / a[t][t];
          for (std::size_t i = 0; i < rows; ++i)
            a[i][j] = checked(static_cast<__int128>(a[i][j]) -
                              static_cast<__int128>(c) * a[i][t]);
        } else {
          bezout_cols(t, j, t);
        }
      }
      bool clear = true;
      for (std::size_t i = t + 1; i < rows && clear; ++i)
        if (a[i][t] != 0) clear = false;
      for (std::size_t j = t + 1; j < cols && clear; ++j)
        if (a[t][j] != 0) clear = false;
      if (clear) return;
    }
  }

  // True if the pivot divides every entry of the trailing submatrix; if not,
  // fold the offending row into row t so the next pass shrinks the pivot.
  bool enforce_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < rows; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t c = 0; c < cols; ++c)
            a[t][c] = checked(static_cast<__int128>(a[t][c]) + a[i][c]);
          return false;
        }
    return true;
  }
};

} // namespace

std::vector<long long> smith_diagonal(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw ValidationError("ragged matrix");
  std::vector<long long> d;
  if (rows == 0 || cols == 0) return d;

  Reducer red{a, rows, cols};
  const std::size_t k = std::min(rows, cols);
  for (std::size_t t = 0; t < k; ++t) {
    if (!red.find_pivot(t)) break;
    do {
      red.clear_cross(t);
    } while (!red.enforce_divisibility(t));
    if (a[t][t] < 0) a[t][t] = -a[t][t];
    d.push_back(a[t][t]);
  }
  while (d.size() < k) d.push_back(0);
  return d;
}

AbelianGroupInvariants abelian_invariants(int generators, const IntMatrix& relations) {
  if (generators < 0) throw ValidationError("negative generator count");
  for (const auto& row : relations)
    if (row.size() != static_cast<std::size_t>(generators))
      throw ValidationError("relation row length must equal the generator count");
  std::vector<long long> d = smith_diagonal(relations);
  AbelianGroupInvariants inv;
  int rank_of_rows = 0;
  for (long long v : d)
    if (v != 0) ++rank_of_rows;
  inv.free_rank = generators - rank_of_rows;
  for (long long v : d)
    if (v > 1) inv.torsion.push_back(v);
  return inv;
}

} // namespace vbt
