#pragma once

// Free presentation of the reduced spherical polytope group: generators are
// unordered tuples of independent vectors where negating a vector flips the
// sign and reordering does not. Product is the join, coproduct the Dehn
// face/link sum, antipode the dual basis.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sah/linalg.hpp"

namespace sah {

using Coeff = long long;

// A normalized simplex [v_1, ..., v_n]: primitive integer vectors with
// positive leading coordinate, sorted lexicographically.
class Generator {
 public:
  // The empty simplex in the zero subspace of Q^ambient_dim.
  static Generator empty(std::size_t ambient_dim);

  const std::vector<Vec>& vectors() const noexcept { return vectors_; }
  const Space& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_.ambient_dim(); }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.vectors_ == b.vectors_ && a.ambient_dim() == b.ambient_dim();
  }
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b);

  std::string to_string() const;

 private:
  friend std::optional<std::pair<Generator, int>> normalize(std::span<const Vec>,
                                                           std::size_t);
  friend Generator subset_generator(const Generator&, std::uint64_t);
  std::vector<Vec> vectors_;
  Space ambient_;
};

// Rescales each vector to primitive form with positive leading coordinate
// (each negation contributes -1) and sorts. Dependent input gives nullopt.
std::optional<std::pair<Generator, int>> normalize(std::span<const Vec> vectors,
                                                   std::size_t ambient_dim);
inline std::optional<std::pair<Generator, int>> normalize(const std::vector<Vec>& vectors,
                                                          std::size_t ambient_dim) {
  return normalize(std::span<const Vec>(vectors), ambient_dim);
}

// Sub-tuple selected by `mask` (bit i keeps vectors()[i]); already normal.
Generator subset_generator(const Generator& g, std::uint64_t mask);

// Formal integer combination of generators, all graded by one subspace.
class Element {
 public:
  explicit Element(Space grading) : grading_(std::move(grading)) {}

  static Element of(const Generator& g, Coeff c = 1);
  // normalize(vectors) with its sign; zero if dependent. Grading = span.
  static Element from_tuple(std::span<const Vec> vectors, std::size_t ambient_dim);

  const Space& grading() const noexcept { return grading_; }
  const std::map<Generator, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coefficient(const Generator& g) const;

  void add_term(const Generator& g, Coeff c);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Coeff k, Element a);
  friend bool operator==(const Element& a, const Element& b) {
    return a.grading_ == b.grading_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Space grading_;
  std::map<Generator, Coeff> terms_;
};

// Formal combination of k-fold tensors of generators. For arity 2 the
// factors of every term have orthogonal ambients summing to the grading.
class Tensor {
 public:
  using Key = std::vector<Generator>;

  Tensor(Space grading, std::size_t arity) : grading_(std::move(grading)), arity_(arity) {}

  const Space& grading() const noexcept { return grading_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::map<Key, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Key key, Coeff c);
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.arity_ == b.arity_ && a.grading_ == b.grading_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Space grading_;
  std::size_t arity_;
  std::map<Key, Coeff> terms_;
};

using TensorElement = Tensor;

// ---------------------------------------------------------------------------
// Hopf operations

// Join product; requires orthogonal gradings.
Element mu(const Element& x, const Element& y);

struct CoproductTerm {
  std::uint64_t subset;  // bitmask over the generator's vectors
  Generator face;        // [S]
  Generator link;        // normalized projection of S^c onto <S>^perp
  int sign;              // sign from normalizing the link
};

// All 2^n terms of the Dehn coproduct of one generator, ordered by subset.
std::vector<CoproductTerm> coproduct_terms(const Generator& g);

Tensor delta(const Element& x);

// Antipode of a generator: normalize(dual_tuple(vectors)), with its sign.
std::pair<Generator, int> antipode_generator(const Generator& g);
Element antipode(const Element& x);

Coeff counit(const Element& x);
Element unit(Coeff k, std::size_t ambient_dim);

// Applies delta to factor `pos` of every term; result has arity + 1.
Tensor apply_delta_at(const Tensor& t, std::size_t pos);
// Contracts factor `pos` with the counit; result has arity - 1.
Tensor apply_counit_at(const Tensor& t, std::size_t pos);
Tensor as_tensor(const Element& x);

// mu tensor mu after swapping the middle factors of delta(x) (x) delta(y).
Tensor delta_of_factors(const Element& x, const Element& y);

// delta(mu(x (x) y)) == (mu (x) mu)(1 (x) tau (x) 1)(delta x (x) delta y).
bool bialg_check(const Generator& x, const Generator& y);

// (delta (x) id) delta == (id (x) delta) delta on x.
bool coassociativity_check(const Element& x);
// (eps (x) id) delta == id == (id (x) eps) delta on x.
bool counit_check(const Element& x);

// ---------------------------------------------------------------------------
// Lee-Szczarba view

struct OrderedTerm {
  Coeff coefficient;
  std::vector<Vec> tuple;
};

// Each generator [w] becomes orientation_sign(w, grading) * (w) as an ordered
// tuple; the canonical echelon basis of each space has orientation +1.
std::vector<OrderedTerm> to_ls(const Element& x);
Element from_ls(std::span<const OrderedTerm> terms, const Space& grading);

// sum_i (-1)^i (t_1, .., t_i^, .., t_{n+1}) in the Lee-Szczarba presentation,
// carried to normal forms through orientation signs.
Element boundary_relation(std::span<const Vec> t);

}  // namespace sah
