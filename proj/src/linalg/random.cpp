#include "sah/random.hpp"

#include <algorithm>

namespace sah {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t RatRng::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rat RatRng::rational(std::int64_t num_bound, std::int64_t den_bound) {
  std::int64_t num = integer(-num_bound, num_bound);
  std::int64_t den = integer(1, den_bound);
  Rat q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

std::vector<Vec> random_basis(RatRng& rng, std::size_t n, std::size_t ambient,
                              std::int64_t num_bound, std::int64_t den_bound) {
  if (n > ambient) throw DegeneracyError("random_basis: more vectors than dimensions");
  for (;;) {
    std::vector<Vec> t(n, Vec(ambient));
    for (auto& v : t)
      for (auto& x : v) x = rng.rational(num_bound, den_bound);
    if (is_independent(t)) return t;
  }
}

std::vector<Vec> random_basis_in(RatRng& rng, const Space& space, std::size_t n,
                                 std::int64_t num_bound, std::int64_t den_bound) {
  if (n > space.rank()) throw DegeneracyError("random_basis_in: more vectors than dimensions");
  for (;;) {
    std::vector<Vec> t;
    for (std::size_t i = 0; i < n; ++i) {
      Vec x = zero_vec(space.ambient_dim());
      for (const auto& row : space.basis()) x = add(x, scale(rng.rational(num_bound, den_bound), row));
      t.push_back(std::move(x));
    }
    if (is_independent(t)) return t;
  }
}

OrthogonalPair orthogonal_pair(RatRng& rng, std::size_t m, std::size_t n, std::size_t extra) {
  std::size_t dim = std::max<std::size_t>(1, m + n + extra);
  auto s = random_basis(rng, m, dim);
  Space rest = complement_in(Space::full(dim), span(s, dim));
  return {dim, s, random_basis_in(rng, rest, n)};
}

Vec random_point_in_span(RatRng& rng, std::span<const Vec> t) {
  if (t.empty()) return {};
  Vec x = zero_vec(t.front().size());
  for (const auto& v : t) x = add(x, scale(rng.rational(kPointHeight, kPointHeight), v));
  return x;
}

}  // namespace sah
