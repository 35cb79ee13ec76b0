#pragma once

// Slow independent reference computations used to cross-check the library.
// Nothing here calls the routine it is checking.

#include <algorithm>
#include <numeric>
#include <vector>

#include "sah/linalg.hpp"

namespace oracle {

using sah::Rat;
using sah::Vec;

// Rational Gram-Schmidt; dependent inputs are skipped.
inline std::vector<Vec> orthogonalize(const std::vector<Vec>& vs) {
  std::vector<Vec> out;
  for (const auto& v : vs) {
    Vec w = v;
    for (const auto& u : out) {
      Rat f = sah::dot(w, u) / sah::dot(u, u);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= f * u[k];
    }
    if (!sah::is_zero(w)) out.push_back(w);
  }
  return out;
}

inline Vec project(const std::vector<Vec>& spanning, const Vec& x) {
  Vec out(x.size(), Rat(0));
  for (const auto& u : orthogonalize(spanning)) {
    Rat f = sah::dot(x, u) / sah::dot(u, u);
    for (std::size_t k = 0; k < x.size(); ++k) out[k] += f * u[k];
  }
  return out;
}

// Projection of -v_i onto the complement of the other vectors, inside span t.
inline Vec dual(const std::vector<Vec>& t, std::size_t i) {
  std::vector<Vec> others;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (j != i) others.push_back(t[j]);
  Vec p = project(others, t[i]);
  Vec out(t[i].size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p[k] - t[i][k];
  return out;
}

// Leibniz expansion.
inline Rat det(const std::vector<Vec>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    int inv = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inv;
    Rat term = inv % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline bool parallel_positive(const Vec& a, const Vec& b) {
  // a = s b with s > 0
  Rat s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k] == 0) {
      if (a[k] != 0) return false;
      continue;
    }
    Rat r = a[k] / b[k];
    if (s == 0) s = r;
    else if (r != s) return false;
  }
  return s > 0;
}

}  // namespace oracle
