// Independent Smith-normal-form oracle.  Reduces integer matrices with plain
// row/column operations and validates the result against the determinant
// divisor characterisation d_1 ... d_k = gcd of all k x k minors.  Used to
// cross-check the library's abelianisation code; shares nothing with it.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline std::vector<long long> smith_diagonal(Mat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<long long> diag;
  std::size_t top = 0;
  while (top < rows && top < cols) {
    // Find a nonzero pivot of minimal absolute value in the active block.
    std::size_t pr = top, pc = top;
    long long best = 0;
    for (std::size_t r = top; r < rows; ++r)
      for (std::size_t c = top; c < cols; ++c)
        if (a[r][c] != 0 &&
            (best == 0 || std::llabs(a[r][c]) < std::llabs(best))) {
          best = a[r][c];
          pr = r;
          pc = c;
        }
    if (best == 0) break;
    std::swap(a[top], a[pr]);
    for (std::size_t r = top; r < rows; ++r) std::swap(a[r][top], a[r][pc]);

    bool clean = true;
    for (std::size_t r = top + 1; r < rows; ++r)
      if (a[r][top] != 0) {
        long long q = a[r][top] / a[top][top];
        for (std::size_t c = top; c < cols; ++c) a[r][c] -= q * a[top][c];
        if (a[r][top] != 0) clean = false;
      }
    for (std::size_t c = top + 1; c < cols; ++c)
      if (a[top][c] != 0) {
        long long q = a[top][c] / a[top][top];
        for (std::size_t r = top; r < rows; ++r) a[r][c] -= q * a[r][top];
        if (a[top][c] != 0) clean = false;
      }
    if (!clean) continue; // smaller remainders exist; pick a new pivot

    // Pivot divides its row and column; enforce divisibility into the block.
    bool divides_all = true;
    for (std::size_t r = top + 1; r < rows && divides_all; ++r)
      for (std::size_t c = top + 1; c < cols && divides_all; ++c)
        if (a[r][c] % a[top][top] != 0) {
          for (std::size_t cc = top; cc < cols; ++cc) a[top][cc] += a[r][cc];
          divides_all = false;
        }
    if (!divides_all) continue;
    diag.push_back(std::llabs(a[top][top]));
    ++top;
  }
  return diag;
}

// Determinant of a small integer matrix by fraction-free elimination.
inline long long exact_det(std::vector<std::vector<long long>> m) {
  std::size_t k = m.size();
  long long sign = 1, prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t nz = p;
    while (nz < k && m[nz][p] == 0) ++nz;
    if (nz == k) return 0;
    if (nz != p) {
      std::swap(m[nz], m[p]);
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < k; ++r)
      for (std::size_t c = p + 1; c < k; ++c)
        m[r][c] = (m[r][c] * m[p][p] - m[r][p] * m[p][c]) / prev;
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

// gcd of all k x k minors, by exhaustive expansion.  Only for tiny matrices.
inline long long minor_gcd(const Mat& a, std::size_t k) {
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  if (k == 0 || k > rows || k > cols || rows > 20 || cols > 20)
    throw std::invalid_argument("minor_gcd: unsupported size");
  long long g = 0;
  for (unsigned rm = 0; rm < (1u << rows); ++rm) {
    if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
    for (unsigned cm = 0; cm < (1u << cols); ++cm) {
      if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
      std::vector<std::vector<long long>> sub;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!(rm >> r & 1u)) continue;
        std::vector<long long> row;
        for (std::size_t c = 0; c < cols; ++c)
          if (cm >> c & 1u) row.push_back(a[r][c]);
        sub.push_back(std::move(row));
      }
      g = std::gcd(g, std::llabs(exact_det(std::move(sub))));
    }
  }
  return g;
}

} // namespace oracle
