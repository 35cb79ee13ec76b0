#pragma once

// Spherical regular tetrahedra in S^3, their dihedral angles, and Dehn
// tensors in (R/piQ) (x) (R/piQ).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sah/bigfloat.hpp"
#include "sah/relation.hpp"

namespace sah {

// 2^-(bits - slack)
BigFloat tolerance(long bits, long slack = 8);

struct Angle {
  BigFloat value;
  std::optional<Rat> pi_rational;  // value == q * pi exactly
  std::optional<Rat> exact_cos;    // cos(value) is this rational exactly

  static Angle numeric(BigFloat v);
  static Angle pi_multiple(const Rat& q, long bits);
  static Angle arccos(const Rat& c, long bits);

  long bits() const { return value.precision(); }
  // cos from the exact tag when there is one.
  BigFloat cosine() const;
  std::string to_string(int digits = 30) const;
};

// Sum and difference keep the pi tag only when both sides carry one.
Angle operator+(const Angle& a, const Angle& b);
Angle operator-(const Angle& a, const Angle& b);

// cos(q pi) when it is rational (q pi in {0, pi/3, pi/2, 2pi/3, pi} mod 2pi).
std::optional<Rat> rational_cos_of_pi_multiple(const Rat& q);
// q with arccos(c) = q pi when c is one of 0, +-1/2, +-1.
std::optional<Rat> pi_multiple_of_arccos(const Rat& c);

// Expressions over integers, decimals, rationals, pi and arccos(r) with
// + - * / and parentheses, e.g. "pi/2", "arccos(-1/3) - 1e-6".
Angle parse_angle(const std::string& text, long bits);

struct SphericalSimplex {
  std::vector<std::vector<BigFloat>> vertices;  // unit vectors
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  long bits = 256;
  std::optional<Angle> side;  // set for regular simplices
};

// Rows of the symmetric square root of (1-c)I + cJ, c = cos a.
SphericalSimplex regular_tetra(const Angle& a, long bits);

Angle edge_length(const SphericalSimplex& s, std::pair<std::size_t, std::size_t> edge);
// Angle between the two opposite vertices projected off the edge's span.
Angle dihedral(const SphericalSimplex& s, std::pair<std::size_t, std::size_t> edge);
// arccos(cos a / (1 + 2 cos a))
Angle tetra_dihedral_formula(const Angle& a, long bits);

struct DehnTerm {
  long long coefficient = 0;
  Angle left, right;
};

struct DehnTensor {
  std::vector<DehnTerm> terms;
  bool is_zero() const { return terms.empty(); }
  std::string to_string(int digits = 30) const;
};

DehnTensor swap(const DehnTensor& t);

// Sum of length (x) dihedral over the six edges; equal terms are merged.
DehnTensor dehn_invariant(const SphericalSimplex& s);

// Drops terms with a pi-rational factor and merges factors equal mod piQ.
DehnTensor reduce_tensor(const DehnTensor& t, const Int& height, long bits);

struct CocommReport {
  DehnTensor reduced;
  std::vector<Angle> basis;  // Q-independent mod piQ, sorted by value
  // m[i][j] = coefficient of basis_i (x) basis_j
  std::vector<std::vector<Rat>> matrix, swapped;
  std::vector<RelationSearch> searches;
  Int height;
  long bits = 0;
  bool equal = false;
  bool certified = false;  // every independence claim is certified by the bound
};

CocommReport cocomm_test(const DehnTensor& t, const Int& height, long bits);

}  // namespace sah
