#pragma once

// Cone location for the sphere decomposition and the Hopf identity checker.
// The cones are spanned by S together with the duals of S^c, one per subset
// S of the basis; cover_check samples points and counts cone memberships.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sah/linalg.hpp"
#include "sah/polytope.hpp"

namespace sah {

struct ConeWitness {
  std::uint64_t subset = 0;
  Vec a;  // coefficients on v_i, i in S, increasing i
  Vec b;  // coefficients on v_j^dual, j not in S, increasing j
  bool strict = false;
};

struct LocateResult {
  std::vector<ConeWitness> witnesses;  // every subset with a nonnegative solution

  // The unique strictly positive witness, if exactly one exists.
  std::optional<ConeWitness> strict() const;
  bool is_tie() const { return !strict().has_value(); }
};

// Precomputed change of basis from t-coordinates to each cone basis.
class Locator {
 public:
  explicit Locator(std::vector<Vec> t);

  const std::vector<Vec>& basis() const noexcept { return t_; }
  const std::vector<Vec>& duals() const noexcept { return duals_; }
  std::size_t size() const noexcept { return t_.size(); }

  // Cone coordinates of sum r_i v_i for the cone of `subset`.
  Vec cone_coordinates(std::uint64_t subset, const Vec& r) const;

  LocateResult locate_coords(const Vec& r) const;
  LocateResult locate(const Vec& x) const;

 private:
  std::vector<Vec> t_;
  std::vector<Vec> duals_;
  Space span_;
  std::vector<Mat> to_cone_;  // indexed by subset
};

LocateResult locate(const Vec& x, std::span<const Vec> t);

struct CoverReport {
  std::size_t samples = 0;
  std::size_t covered = 0;        // points with at least one nonnegative cone
  std::size_t unique_strict = 0;  // points with exactly one strict cone
  std::size_t ties = 0;           // points on a cone boundary
  std::size_t overlaps = 0;       // points in two or more open cones
  std::optional<std::size_t> counterexample;  // first failing sample index
  std::optional<Vec> counterexample_point;

  bool pass() const { return covered == samples && overlaps == 0; }
  friend bool operator==(const CoverReport&, const CoverReport&) = default;
};

// Sample k is sum r_i v_i with r drawn from RatRng(mix_seed(seed, k)).
Vec cover_sample(std::span<const Vec> t, std::uint64_t seed, std::size_t k);

// OpenMP over samples; the fold is in sample order, so the report equals the
// serial one.
CoverReport cover_check(std::span<const Vec> t, std::size_t samples, std::uint64_t seed);
CoverReport cover_check_serial(std::span<const Vec> t, std::size_t samples, std::uint64_t seed);

struct SubsetMismatch {
  std::uint64_t subset;
  Element computed;
  Element expected;
};

struct HopfReport {
  std::size_t n = 0;
  Element e1{Space{}};        // mu (id (x) alpha) delta [t]
  Element expected{Space{}};  // sum_S [S u (S^c)^dual]
  Element e2{Space{}};        // mu (alpha (x) id) delta [t]
  bool termwise = false;
  std::optional<SubsetMismatch> mismatch;
  bool transport = false;  // antipode(e2) == e1
  CoverReport cover;

  bool pass() const { return termwise && transport && cover.pass(); }
};

HopfReport hopf_check(std::span<const Vec> t, std::size_t samples = 1000,
                      std::uint64_t seed = 0);

}  // namespace sah
