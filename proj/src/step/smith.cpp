#include "sah/smith.hpp"

#include <utility>

namespace sah {

IntMat identity(std::size_t n) {
  IntMat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat zeros(std::size_t rows, std::size_t cols) {
  return IntMat(rows, std::vector<Int>(cols, Int(0)));
}

std::vector<Int> mul(const IntMat& m, const std::vector<Int>& v) {
  std::vector<Int> out(m.size(), Int(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && m[i][j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

IntMat mul(const IntMat& a, const IntMat& b, std::size_t inner) {
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  IntMat out = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

namespace {

// Working state; every elementary operation on `a` is mirrored in the
// transforms so that p * a0 * q == a holds throughout.
struct Reducer {
  IntMat a, p, p_inv, q, q_inv;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(p[i], p[j]);
    for (auto& row : p_inv) std::swap(row[i], row[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : q) std::swap(row[i], row[j]);
    std::swap(q_inv[i], q_inv[j]);
  }
  // row_i += f * row_t
  void add_row(std::size_t i, std::size_t t, const Int& f) {
    for (std::size_t k = 0; k < n; ++k) a[i][k] += f * a[t][k];
    for (std::size_t k = 0; k < m; ++k) p[i][k] += f * p[t][k];
    for (auto& row : p_inv) row[t] -= f * row[i];
  }
  // col_j += f * col_t
  void add_col(std::size_t j, std::size_t t, const Int& f) {
    for (auto& row : a) row[j] += f * row[t];
    for (auto& row : q) row[j] += f * row[t];
    for (std::size_t k = 0; k < n; ++k) q_inv[t][k] -= f * q_inv[j][k];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : p[i]) x = -x;
    for (auto& row : p_inv) row[i] = -row[i];
  }
};

}  // namespace

Smith smith(const IntMat& a0, std::size_t rows, std::size_t cols) {
  Reducer r{a0, identity(rows), identity(rows), identity(cols), identity(cols), rows, cols};
  Smith out;
  out.rows = rows;
  out.cols = cols;
  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (r.a[i][j] != 0 && (bi == rows || abs(r.a[i][j]) < abs(r.a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      r.swap_rows(t, bi);
      r.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (r.a[i][t] == 0) continue;
        Int f = r.a[i][t] / r.a[t][t];
        r.add_row(i, t, -f);
        if (r.a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (r.a[t][j] == 0) continue;
        Int f = r.a[t][j] / r.a[t][t];
        r.add_col(j, t, -f);
        if (r.a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull in a row whose entries the pivot does not divide.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (r.a[i][j] % r.a[t][t] != 0) {
            r.add_row(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (r.a[t][t] == 0) break;
    if (r.a[t][t] < 0) r.negate_row(t);
    out.diagonal.push_back(r.a[t][t]);
  }
  out.p = std::move(r.p);
  out.p_inv = std::move(r.p_inv);
  out.q = std::move(r.q);
  out.q_inv = std::move(r.q_inv);
  return out;
}

}  // namespace sah
