#include "doctest.h"
#include "oracle.hpp"
#include "sah/linalg.hpp"
#include "sah/random.hpp"

using namespace sah;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-2/-4")) == "1/2");
  CHECK(to_string(parse_rat("0.25")) == "1/4");
  CHECK(to_string(parse_rat("7")) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("abc"), ParseError);
  CHECK(to_string(Vec{Rat(1), Rat(-1, 2)}) == "(1,-1/2)");
}

TEST_CASE("span") {
  CHECK(span(std::vector<Vec>{}, 2).is_zero());
  Space plane = span({v({2, 0}), v({0, 3})}, 2);
  CHECK(plane.is_full());
  CHECK(plane.basis() == Mat{v({1, 0}), v({0, 1})});
  Space line = span({v({1, 1}), v({2, 2})}, 2);
  CHECK(line.rank() == 1);
  CHECK(line.basis() == Mat{v({1, 1})});
  CHECK_THROWS_AS(span({v({1, 1, 0}), v({1, 0})}, 2), AmbientError);
  CHECK(span({v({3, 0, 6})}, 3) == span({v({-1, 0, -2})}, 3));
}

TEST_CASE("complement_in") {
  Space q2 = Space::full(2);
  CHECK(complement_in(q2, span({v({1, 0})}, 2)) == span({v({0, 1})}, 2));
  CHECK(complement_in(q2, q2).is_zero());
  CHECK(complement_in(q2, span({v({1, 1})}, 2)) == span({v({1, -1})}, 2));
  CHECK_THROWS_AS(complement_in(span({v({1, 0})}, 2), span({v({0, 1})}, 2)), ContainmentError);
}

TEST_CASE("project") {
  CHECK(project(span({v({1, 0})}, 2), v({3, 5})) == v({3, 0}));
  CHECK(project(Space::zero(2), v({3, 5})) == v({0, 0}));
  CHECK(project(span({v({1, 1})}, 2), v({1, 0})) == Vec{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("dual_tuple") {
  auto e = dual_tuple(std::vector<Vec>{v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  CHECK(e == std::vector<Vec>{v({-1, 0, 0}), v({0, -1, 0}), v({0, 0, -1})});
  auto d = dual_tuple(std::vector<Vec>{v({1, 0}), v({1, 1})});
  CHECK(d == std::vector<Vec>{v({-1, 1}), v({0, -1})});
  CHECK_THROWS_AS(dual_tuple(std::vector<Vec>{v({1, 1}), v({2, 2})}), DegeneracyError);
}

TEST_CASE("orientation_sign") {
  Space q2 = Space::full(2);
  CHECK(orientation_sign(std::vector<Vec>{v({1, 0}), v({0, 1})}, q2) == 1);
  CHECK(orientation_sign(std::vector<Vec>{v({0, 1}), v({1, 0})}, q2) == -1);
  Space line = span({v({1, 2, 0})}, 3);
  CHECK(orientation_sign(std::vector<Vec>{v({-2, -4, 0})}, line) == -1);
  CHECK_THROWS_AS(orientation_sign(std::vector<Vec>{v({1, 0})}, q2), DegeneracyError);
}

TEST_CASE("factorization_check examples") {
  CHECK(factorization_check(std::vector<Vec>{v({1, 0}), v({0, 1})}, 0b01));
  CHECK(factorization_check(std::vector<Vec>{v({1, 0}), v({1, 1})}, 0b01));
}

TEST_CASE("property: complements, projections and duals against the oracle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RatRng rng(mix_seed(seed, 11));
    std::size_t dim = static_cast<std::size_t>(rng.integer(1, 5));
    std::size_t n = static_cast<std::size_t>(rng.integer(1, static_cast<long>(dim)));
    auto t = random_basis(rng, n, dim);
    Space full = Space::full(dim);
    Space u = span(t, dim);
    CHECK(complement_in(full, complement_in(full, u)) == u);

    Vec x(dim);
    for (auto& c : x) c = rng.rational(kPointHeight, kPointHeight);
    Vec p = project(u, x);
    CHECK(p == oracle::project(t, x));
    CHECK(add(p, project(complement_in(full, u), x)) == x);

    auto duals = dual_tuple(t);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(oracle::parallel_positive(duals[i], oracle::dual(t, i)));
      CHECK(dot(duals[i], t[i]) < 0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) CHECK(dot(duals[i], t[j]) == 0);
    }
    auto back = dual_tuple(duals);
    for (std::size_t i = 0; i < n; ++i) CHECK(oracle::parallel_positive(back[i], t[i]));

    std::uint64_t mask = static_cast<std::uint64_t>(rng.integer(0, (1L << n) - 1));
    CHECK(factorization_check(t, mask));
  }
}

TEST_CASE("property: orientation signs multiply like change-of-basis determinants") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RatRng rng(mix_seed(seed, 12));
    std::size_t dim = static_cast<std::size_t>(rng.integer(1, 4));
    std::size_t n = static_cast<std::size_t>(rng.integer(1, static_cast<long>(dim)));
    auto t = random_basis(rng, n, dim);
    auto s = random_basis(rng, n, dim);
    Space vsp = span(t, dim);
    // Express s inside span t by mapping through coordinates.
    std::vector<Vec> s_in;
    for (const auto& c : s) {
      Vec x = zero_vec(dim);
      for (std::size_t i = 0; i < n; ++i) x = add(x, scale(c[i % dim], t[i]));
      s_in.push_back(x);
    }
    if (!is_independent(s_in)) continue;
    std::vector<Vec> change;
    for (const auto& x : s_in) change.push_back(solve_in_basis(t, x));
    int expect = sgn(oracle::det(change));
    CHECK(orientation_sign(t, vsp) * orientation_sign(s_in, vsp) == expect);
  }
}
