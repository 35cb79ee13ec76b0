#pragma once

// Integer relation search by LLL reduction of the lattice spanned by the rows
// (e_i | round(x_i * 2^s)) with s = bits / 2.

#include <optional>
#include <vector>

#include "sah/bigfloat.hpp"

namespace sah {

struct RelationSearch {
  std::size_t count = 0;  // number of inputs
  long bits = 0;
  Int height;
  long scale_bits = 0;
  std::optional<std::vector<Int>> relation;  // primitive, first nonzero entry positive
  long residual_log2 = 0;                    // floor(log2 |sum c_i x_i|) when found
  // Every nonzero lattice vector is at least 2^norm_bound_log2 long
  // (minimum Gram-Schmidt norm of the reduced basis).
  double norm_bound_log2 = 0;
  // Longest lattice vector a relation within the height could produce.
  double relation_norm_log2 = 0;
  // No relation with |c_i| <= height and residual below 2^-(bits/2) exists.
  bool certified_none = false;
};

// Nonzero c with |c_i| <= height and |sum c_i x_i| < 2^-(bits/2).
// PrecisionError when bits < 128, when an input carries fewer bits than
// requested, or when the lattice cannot separate relations of this height.
RelationSearch find_relation(const std::vector<BigFloat>& xs, const Int& height, long bits);

inline std::optional<std::vector<Int>> integer_relation(const std::vector<BigFloat>& xs,
                                                        const Int& height, long bits) {
  return find_relation(xs, height, bits).relation;
}

// Exact LLL with delta = 3/4 on integer row vectors; returns the squared
// Gram-Schmidt norms of the reduced basis.
std::vector<Rat> lll_reduce(std::vector<std::vector<Int>>& basis);

}  // namespace sah
