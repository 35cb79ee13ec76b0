#pragma once

// Exact linear algebra over Q inside a fixed ambient Q^N with the standard
// dot product. Every value is immutable once built; all functions are pure.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sah/errors.hpp"

namespace sah {

using Rat = mpq_class;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

// ---------------------------------------------------------------------------
// Rationals and vectors

// num/den in canonical form; mpq_class(num, den) alone does not reduce.
Rat ratio(long num, long den);

std::string to_string(const Rat& q);
Rat parse_rat(const std::string& text);

std::string to_string(const Vec& v);  // "(1,-1/2,0)"

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& v);
Vec neg(const Vec& v);
bool is_zero(const Vec& v);

// Positive rescaling to an integer vector whose entries have gcd 1.
// The zero vector is returned unchanged.
Vec primitive(const Vec& v);

// Lexicographic comparison on coordinates.
std::strong_ordering lex_compare(const Vec& a, const Vec& b);

// Sign of the first nonzero coordinate (0 for the zero vector).
int leading_sign(const Vec& v);

// ---------------------------------------------------------------------------
// Small dense matrices

// Reduces `rows` in place to reduced row-echelon form, dropping zero rows.
// Pivots are taken from the first `cols` columns; row operations act on the
// whole row, so extra columns ride along as an augmented block.
// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Mat& rows, std::size_t cols);

std::size_t rank_of(std::span<const Vec> vectors);
bool is_independent(std::span<const Vec> vectors);

Rat determinant(Mat m);
Mat inverse(const Mat& m);  // throws DegeneracyError when singular
Mat transpose(const Mat& m, std::size_t cols);
Vec mat_vec(const Mat& m, const Vec& v);

// ---------------------------------------------------------------------------
// Subspaces

// A linear subspace of Q^N stored by its reduced row-echelon basis. Two
// Space values are equal iff they denote the same subspace.
class Space {
 public:
  Space() = default;

  static Space zero(std::size_t ambient_dim);
  static Space full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == ambient_; }
  const Mat& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Space& other) const;

  // Coordinates of v in the canonical basis. Requires contains(v).
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Space& a, const Space& b);
  friend std::strong_ordering operator<=>(const Space& a, const Space& b);

  std::string to_string() const;

 private:
  friend Space span(std::span<const Vec> vectors, std::size_t ambient_dim);

  std::size_t ambient_ = 0;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

Space span(std::span<const Vec> vectors, std::size_t ambient_dim);
inline Space span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  return span(std::span<const Vec>(vectors), ambient_dim);
}

Space sum(const Space& a, const Space& b);
Space intersect(const Space& a, const Space& b);
bool are_orthogonal(const Space& a, const Space& b);

// W inside V with W orthogonal to U and U + W = V. Requires U inside V.
Space complement_in(const Space& v, const Space& u);
Space orthogonal_complement(const Space& u);

// Orthogonal projection of x onto U.
Vec project(const Space& u, const Vec& x);

// Coefficients c with sum c_i t_i = x. Throws AmbientError when x is not in
// the span of t, DegeneracyError when t is dependent.
Vec solve_in_basis(std::span<const Vec> t, const Vec& x);

// (v_1^dual, ..., v_n^dual): v_i^dual is orthogonal to every v_j (j != i) and
// pairs negatively with v_i. Outputs are primitive integer vectors.
std::vector<Vec> dual_tuple(std::span<const Vec> t);

// Checks, for every j outside `subset`, that projecting onto the complement
// (in span t) of the other n-1 vectors equals the two-step projection through
// the complement of span(subset). `subset` is a bitmask over t.
bool factorization_check(std::span<const Vec> t, std::uint64_t subset);

// Sign of det(t) with t written in the canonical basis of V.
int orientation_sign(std::span<const Vec> t, const Space& v);

}  // namespace sah
