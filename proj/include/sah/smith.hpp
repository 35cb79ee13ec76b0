#pragma once

// Smith normal form over Z with both transforms and their inverses.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace sah {

using Int = mpz_class;
using IntMat = std::vector<std::vector<Int>>;  // row-major

IntMat identity(std::size_t n);
IntMat zeros(std::size_t rows, std::size_t cols);
std::vector<Int> mul(const IntMat& m, const std::vector<Int>& v);
IntMat mul(const IntMat& a, const IntMat& b, std::size_t inner);

// P * A * Q = diag(d_0, ..., d_{r-1}, 0, ...) with d_i > 0 and d_i | d_{i+1}.
struct Smith {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> diagonal;  // the r nonzero invariant factors
  IntMat p, p_inv, q, q_inv;

  std::size_t rank() const { return diagonal.size(); }
};

Smith smith(const IntMat& a, std::size_t rows, std::size_t cols);

}  // namespace sah
