#pragma once

// Finite models of the doubly suspended Tits complex: strict flags in a finite
// lattice of subspaces, relative to the flags that miss 0 or the top space.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sah/linalg.hpp"
#include "sah/polytope.hpp"
#include "sah/smith.hpp"

namespace sah {

using Flag = std::vector<Space>;  // strictly increasing

inline constexpr std::size_t kMaxCells = 20000;

// Integer chain of k-simplices (flags with k+1 entries).
struct Chain {
  std::size_t degree = 0;
  std::map<Flag, Coeff> terms;

  void add(const Flag& f, Coeff c);
  bool is_zero() const { return terms.empty(); }
  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  friend Chain operator*(Coeff k, Chain c);
  friend bool operator==(const Chain&, const Chain&) = default;
  std::string to_string() const;
};

class FlagComplex {
 public:
  const std::vector<Space>& lattice() const noexcept { return lattice_; }
  const Space& bottom() const noexcept { return lattice_.front(); }
  const Space& top() const noexcept { return lattice_.back(); }
  std::size_t dimension() const noexcept { return cells_.empty() ? 0 : cells_.size() - 1; }
  std::size_t cell_count() const noexcept { return cell_count_; }

  // Every strict flag with k+1 entries, collapsed or not.
  const std::vector<Flag>& cells(std::size_t k) const;
  bool is_collapsed(const Flag& f) const;
  // Flags from 0 to the top space: the basis of the relative chain group.
  const std::vector<Flag>& relative_cells(std::size_t k) const;
  std::optional<std::size_t> index_of(std::size_t k, const Flag& f) const;

  // Relative boundary C_k -> C_{k-1}; rows index (k-1)-cells.
  IntMat boundary_matrix(std::size_t k) const;

  std::vector<Int> to_vector(const Chain& c) const;  // throws if a cell is missing
  Chain from_vector(std::size_t k, const std::vector<Int>& x) const;

  friend FlagComplex build_complex(std::vector<Space> lattice);

 private:
  std::vector<Space> lattice_;
  std::vector<std::vector<Flag>> cells_;
  std::vector<std::vector<Flag>> relative_;
  std::vector<std::map<Flag, std::size_t>> index_;
  std::size_t cell_count_ = 0;
};

// Requires 0 and a top space containing every element; duplicates removed.
FlagComplex build_complex(std::vector<Space> lattice);

// Spans of all subsets of t, optionally closed under intersection and sum.
std::vector<Space> subset_span_lattice(std::span<const Vec> t, std::size_t ambient_dim,
                                       bool close = false);

// sum_i (-1)^i d_i on flags, keeping collapsed faces.
Chain full_boundary(const Chain& c);
// Boundary in the relative complex: collapsed faces dropped.
Chain relative_boundary(const FlagComplex& cx, const Chain& c);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

HomologyGroup homology(const FlagComplex& cx, std::size_t k);

// Coordinates of cycles in a basis of H_k read off two Smith forms.
class HomologyBasis {
 public:
  HomologyBasis(const FlagComplex& cx, std::size_t k);

  std::size_t degree() const noexcept { return k_; }
  const HomologyGroup& group() const noexcept { return group_; }

  bool is_cycle(const Chain& c) const;
  // Free coordinates of a cycle. The map is linear on all chains and only
  // meaningful on cycles.
  std::vector<Int> free_coordinates(const Chain& c) const;
  std::vector<Int> torsion_coordinates(const Chain& c) const;
  // c = boundary(witness) when c is a boundary.
  std::optional<Chain> solve_boundary(const Chain& c) const;

 private:
  std::vector<Int> kernel_coords(const Chain& c) const;  // u = P2 (Q1^-1 x)[r1..]

  const FlagComplex* cx_;
  std::size_t k_;
  HomologyGroup group_;
  Smith d_k_;      // boundary out of degree k
  Smith m_;        // next boundary in kernel coordinates
  std::size_t r1_ = 0;
};

// sum_sigma sgn(sigma) [0, <v_s1>, <v_s1, v_s2>, ..., V]; degenerate flags
// are dropped, so a dependent tuple gives the zero chain.
Chain apartment_chain(std::span<const Vec> t, std::size_t ambient_dim);
// As above but a dependent tuple is an error.
Chain apartment_cycle(std::span<const Vec> t, std::size_t ambient_dim);

// Eilenberg-Zilber product with vertices (i, j) -> A_i + B_j.
Chain shuffle_product(const Chain& a, const Chain& b);

struct ProductReport {
  bool degenerate = false;  // both sides are the zero chain
  bool chains_equal = false;
  std::vector<Int> lhs, rhs;  // free coordinates in the joint complex
  bool pass() const { return degenerate || (chains_equal && lhs == rhs); }
};

// The apartment of s ++ t against the product of the apartments of s and t.
ProductReport chain_product_check(std::span<const Vec> s, std::span<const Vec> t);

struct CoproductComponent {
  Space u;                       // <S>
  std::uint64_t subset = 0;
  std::vector<std::vector<Int>> lhs, rhs;  // coordinate matrices in H(U) (x) H(W)
  bool in_kernel = false;
};

struct CoproductReport {
  std::size_t n = 0;
  bool theta_defined = true;  // the cut map never hit the basepoint
  std::vector<CoproductComponent> components;
  bool pass() const;
};

// The cut map at the halves system applied to the apartment of t, against
// sum_S sgn(S) apt(S) (x) apt(pr S^c) computed from the Pt coproduct.
CoproductReport chain_coproduct_check(std::span<const Vec> t);

// Alternating apartment sum of the boundary relation of n+1 vectors in Q^n
// (through to_ls signs) and, if one exists, a witness that it bounds in the
// subset-span complex. Settled for n = 2; exploratory for n >= 3.
struct RelationReport {
  Chain relation;
  std::optional<Chain> witness;
  bool pass() const { return witness.has_value(); }
};
RelationReport solomon_tits_relation(std::span<const Vec> t, bool closed = false);

}  // namespace sah
