#pragma once

// Deterministic seeded generators for the randomized checks.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sah/linalg.hpp"

namespace sah {

// Bound on numerators and denominators of sampled points.
inline constexpr std::int64_t kPointHeight = 10000;

// splitmix64 finalizer, used to derive independent per-item streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  // Numerator in [-num_bound, num_bound], denominator in [1, den_bound].
  Rat rational(std::int64_t num_bound, std::int64_t den_bound);
  bool coin() { return integer(0, 1) == 1; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// n independent vectors in Q^ambient with small-height rational entries.
std::vector<Vec> random_basis(RatRng& rng, std::size_t n, std::size_t ambient,
                              std::int64_t num_bound = 9, std::int64_t den_bound = 4);

// n independent random combinations of the basis of `space`.
std::vector<Vec> random_basis_in(RatRng& rng, const Space& space, std::size_t n,
                                 std::int64_t num_bound = 9, std::int64_t den_bound = 4);

struct OrthogonalPair {
  std::size_t dim;
  std::vector<Vec> s, t;
};

// Tuples of sizes m and n with orthogonal spans inside Q^max(1, m+n+extra).
OrthogonalPair orthogonal_pair(RatRng& rng, std::size_t m, std::size_t n, std::size_t extra = 0);

// sum r_i t_i with each r_i of height at most kPointHeight.
Vec random_point_in_span(RatRng& rng, std::span<const Vec> t);

}  // namespace sah
