#pragma once

// Negative definiteness through the characteristic polynomial of -W (Faddeev-LeVerrier, exact
// integer arithmetic). A real symmetric matrix is positive definite iff the coefficients of
// det(tI - A) alternate strictly in sign.

#include <cstdint>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

inline std::vector<std::int64_t> charpoly(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  Mat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
      next[i][i] += c[k - 1];
    }
    m = next;
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[k] = -tr / static_cast<std::int64_t>(k);
  }
  return c;
}

inline bool negative_definite(const Mat& w) {
  Mat a = w;
  for (auto& row : a)
    for (auto& x : row) x = -x;
  const auto c = charpoly(a);
  for (std::size_t k = 1; k < c.size(); ++k) {
    const std::int64_t want = k % 2 == 1 ? -1 : 1;
    if (c[k] == 0 || (c[k] > 0 ? 1 : -1) != want) return false;
  }
  return true;
}

}  // namespace oracle
