#pragma once

// Step functions [0,1] -> Sub(V) and the little-intervals cut map.

#include <optional>
#include <string>
#include <vector>

#include "sah/linalg.hpp"

namespace sah {

struct Step {
  Rat length;
  Space value;
  friend bool operator==(const Step&, const Step&) = default;
};

// A weakly increasing step function with values in Sub(ambient). The normal
// form merges equal neighbours. It is the basepoint when it does not start
// at 0 or does not end at the ambient space.
class StepFn {
 public:
  // Steps with positive lengths summing to 1 and nested values.
  StepFn(Space ambient, std::vector<Step> steps);

  // Values on [c_{i}, c_{i+1}] with c_0 = 0 and c_{k+1} = 1; `cuts` strictly
  // increasing inside (0,1), values.size() == cuts.size() + 1.
  static StepFn from_cuts(Space ambient, const std::vector<Rat>& cuts,
                          std::vector<Space> values);

  const Space& ambient() const noexcept { return ambient_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  bool is_basepoint() const noexcept { return basepoint_; }

  std::vector<Rat> cut_points() const;
  bool is_cut_point(const Rat& x) const;
  // Value at a point that is not a cut point; at 1 the last value.
  const Space& value_at(const Rat& x) const;

  // phi(a + (b - a) x) for x in [0,1].
  StepFn restrict(const Rat& a, const Rat& b) const;

  std::vector<Space> values() const;

  friend bool operator==(const StepFn&, const StepFn&) = default;
  std::string to_string() const;

 private:
  Space ambient_;
  std::vector<Step> steps_;
  bool basepoint_ = false;
};

// Equality in the quotient where every basepoint function is identified.
bool same_point(const StepFn& a, const StepFn& b);

// Pointwise direct sum over the common refinement; ambients orthogonal.
StepFn stepfn_oplus(const StepFn& phi, const StepFn& psi);

struct Interval {
  Rat a, b;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// n little intervals with disjoint interiors inside [0,1].
class CutSystem {
 public:
  explicit CutSystem(std::vector<Interval> intervals);
  static CutSystem unit() { return CutSystem({{Rat(0), Rat(1)}}); }
  static CutSystem halves() { return CutSystem({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}}); }

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t arity() const noexcept { return intervals_.size(); }

  // sigma^* e: result[i] = intervals[perm[i]].
  CutSystem permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const CutSystem&, const CutSystem&) = default;
  std::string to_string() const;

 private:
  std::vector<Interval> intervals_;
};

// e o (f_1, ..., f_n): the intervals of f_i mapped affinely into e_i.
CutSystem operad_compose(const CutSystem& e, const std::vector<CutSystem>& fs);

struct ThetaResult {
  std::vector<Space> flag;       // U_1 ⊆ ... ⊆ U_n = V in ascending interval order
  std::vector<StepFn> factors;   // in the input interval order
  friend bool operator==(const ThetaResult&, const ThetaResult&) = default;
};

// The cut map; nullopt is the basepoint.
std::optional<ThetaResult> theta(const CutSystem& e, const StepFn& phi);

// theta(e, phi + psi) against the componentwise sums of theta(e, phi) and
// theta(e, psi).
bool prod_coprod_check(const StepFn& phi, const StepFn& psi, const CutSystem& e);

// theta(e o f, phi) against theta(f_i, -) applied to each factor of theta(e, phi).
bool operad_theta_check(const CutSystem& e, const std::vector<CutSystem>& fs, const StepFn& phi);

// Seeded generators for the randomized checks.
class RatRng;
// Non-basepoint step function onto `ambient` with cut points of denominator <= 12.
StepFn random_stepfn(RatRng& rng, const Space& ambient);
// n intervals with endpoints of denominator <= 16, in random order.
CutSystem random_cuts(RatRng& rng, std::size_t arity);

}  // namespace sah
