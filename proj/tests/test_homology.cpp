#include <numeric>

#include "doctest.h"
#include "sah/flag_complex.hpp"
#include "sah/random.hpp"

using namespace sah;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Vec> standard_basis(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rat(0));
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

IntMat random_int_matrix(RatRng& rng, std::size_t m, std::size_t n) {
  IntMat a = zeros(m, n);
  for (auto& row : a)
    for (auto& x : row) x = Int(static_cast<long>(rng.integer(-6, 6)));
  return a;
}

Int gcd_of_entries(const IntMat& a) {
  Int g = 0;
  for (const auto& row : a)
    for (const auto& x : row) g = gcd(g, x);
  return g;
}

}  // namespace

TEST_CASE("property: Smith normal form") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RatRng rng(mix_seed(seed, 7));
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 6));
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
    IntMat a = random_int_matrix(rng, m, n);
    if (rng.coin()) {  // force a rank drop now and then
      for (std::size_t j = 0; j < n; ++j) a[m - 1][j] = 2 * a[0][j];
    }
    Smith s = smith(a, m, n);
    IntMat d = mul(mul(s.p, a, m), s.q, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int expected = (i == j && i < s.rank()) ? s.diagonal[i] : Int(0);
        CHECK(d[i][j] == expected);
      }
    CHECK(mul(s.p, s.p_inv, m) == identity(m));
    CHECK(mul(s.q, s.q_inv, n) == identity(n));
    for (std::size_t i = 0; i + 1 < s.rank(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    if (s.rank() > 0) CHECK(s.diagonal[0] == gcd_of_entries(a));
  }
}

TEST_CASE("homology of small flag complexes") {
  SUBCASE("a single point") {
    FlagComplex cx = build_complex({Space::zero(2)});
    CHECK(homology(cx, 0).betti == 1);
  }
  SUBCASE("a line") {
    std::vector<Vec> e1{v({1, 0})};
    FlagComplex cx = build_complex(subset_span_lattice(e1, 2));
    CHECK(homology(cx, 1).betti == 1);
    CHECK(homology(cx, 0).betti == 0);
  }
  SUBCASE("k lines in the plane") {
    for (long k = 2; k <= 5; ++k) {
      std::vector<Vec> lines;
      for (long i = 0; i < k; ++i) lines.push_back(v({1, i}));
      FlagComplex cx = build_complex(subset_span_lattice(lines, 2));
      auto h = homology(cx, 2);
      CHECK(h.betti == static_cast<std::size_t>(k - 1));
      CHECK(h.torsion.empty());
      CHECK(homology(cx, 1).betti == 0);
    }
  }
  SUBCASE("Boolean lattice in Q^3") {
    auto e = standard_basis(3);
    FlagComplex cx = build_complex(subset_span_lattice(e, 3));
    HomologyBasis hb(cx, 3);
    CHECK(hb.group().betti == 1);
    CHECK(hb.group().torsion.empty());
    Chain apt = apartment_cycle(e, 3);
    CHECK(hb.is_cycle(apt));
    auto c = hb.free_coordinates(apt);
    REQUIRE(c.size() == 1);
    CHECK(abs(c[0]) == 1);
  }
}

TEST_CASE("capacity and dependent apartments") {
  auto e = standard_basis(3);
  std::vector<Vec> dependent{v({1, 0}), v({0, 1}), v({1, 1})};
  CHECK(apartment_chain(dependent, 2).is_zero());
  CHECK_THROWS_AS(apartment_cycle(dependent, 2), DegeneracyError);
  CHECK_THROWS_AS(apartment_chain(e, 2), AmbientError);
}

TEST_CASE("property: boundary of boundary vanishes and apartments are relative cycles") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RatRng rng(mix_seed(seed, 11));
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    auto t = random_basis(rng, n, n, 3, 2);
    Chain apt = apartment_cycle(t, n);
    CHECK(full_boundary(full_boundary(apt)).is_zero());
    FlagComplex cx = build_complex(subset_span_lattice(t, n));
    CHECK(relative_boundary(cx, apt).is_zero());
    for (const auto& [f, c] : full_boundary(apt).terms) CHECK(cx.is_collapsed(f));
    HomologyBasis hb(cx, n);
    auto coords = hb.free_coordinates(apt);
    REQUIRE(coords.size() == 1);
    CHECK(abs(coords[0]) == 1);
    // A boundary is recognized and its witness reproduces it.
    if (n >= 2) {
      const auto& top = cx.relative_cells(n + 1);
      if (!top.empty()) {
        Chain cell;
        cell.degree = n + 1;
        cell.add(top.front(), 1);
        Chain b = relative_boundary(cx, cell);
        HomologyBasis hb2(cx, n);
        auto w = hb2.solve_boundary(b);
        REQUIRE(w.has_value());
        CHECK(relative_boundary(cx, *w) == b);
      }
    }
  }
}

TEST_CASE("apartment products") {
  SUBCASE("1 + 1") {
    std::vector<Vec> s{v({1, 0})}, t{v({0, 1})};
    CHECK(chain_product_check(s, t).pass());
  }
  SUBCASE("1 + 2") {
    std::vector<Vec> s{v({1, 0, 0})}, t{v({0, 1, 1}), v({0, 1, -2})};
    auto rep = chain_product_check(s, t);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.pass());
  }
  SUBCASE("degenerate") {
    std::vector<Vec> s{v({1, 0, 0})}, t{v({0, 1, 0}), v({0, 2, 0})};
    CHECK(chain_product_check(s, t).degenerate);
  }
  SUBCASE("not orthogonal") {
    std::vector<Vec> s{v({1, 0})}, t{v({1, 1})};
    CHECK_THROWS_AS(chain_product_check(s, t), OrthogonalityError);
  }
}

TEST_CASE("property: apartment products on random orthogonal splits") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    RatRng rng(mix_seed(seed, 12));
    std::size_t dim = static_cast<std::size_t>(rng.integer(2, 4));
    std::size_t k = static_cast<std::size_t>(rng.integer(1, static_cast<long>(dim) - 1));
    auto basis = random_basis(rng, dim, dim, 3, 2);
    Space a = span(std::vector<Vec>(basis.begin(), basis.begin() + static_cast<long>(k)), dim);
    Space b = complement_in(Space::full(dim), a);
    auto s = random_basis_in(rng, a, k, 3, 2);
    auto t = random_basis_in(rng, b, dim - k, 3, 2);
    auto rep = chain_product_check(s, t);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.pass());
  }
}

TEST_CASE("cut map against the coproduct on apartments") {
  SUBCASE("n = 1") {
    std::vector<Vec> t{v({2, 1})};
    auto rep = chain_coproduct_check(t);
    CHECK(rep.components.size() == 2);
    CHECK(rep.pass());
  }
  SUBCASE("n = 2") {
    std::vector<Vec> t{v({1, 0}), v({1, 1})};
    CHECK(chain_coproduct_check(t).pass());
  }
  SUBCASE("n = 3") {
    std::vector<Vec> t{v({1, 0, 0}), v({1, 1, 0}), v({0, 1, 1})};
    auto rep = chain_coproduct_check(t);
    CHECK(rep.components.size() == 8);
    CHECK(rep.pass());
    for (const auto& c : rep.components) {
      REQUIRE(c.lhs.size() == 1);
      REQUIRE(c.lhs[0].size() == 1);
      CHECK(abs(c.lhs[0][0]) == 1);
    }
  }
  SUBCASE("property") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      RatRng rng(mix_seed(seed, 13));
      std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
      std::size_t dim = n + static_cast<std::size_t>(rng.integer(0, 1));
      auto t = random_basis(rng, n, dim, 3, 2);
      auto rep = chain_coproduct_check(t);
      CHECK(rep.pass());
    }
  }
}

TEST_CASE("property: the three-term relation bounds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RatRng rng(mix_seed(seed, 14));
    std::vector<Vec> three;
    while (three.size() < 3) {
      Vec x = random_basis(rng, 1, 2, 5, 3).front();
      bool fresh = true;
      for (const auto& y : three)
        if (rank_of(std::vector<Vec>{x, y}) < 2) fresh = false;
      if (fresh) three.push_back(x);
    }
    auto rep = solomon_tits_relation(three);
    REQUIRE(rep.pass());
    FlagComplex cx = build_complex(subset_span_lattice(three, 2));
    CHECK(relative_boundary(cx, *rep.witness) == rep.relation);
  }
}

TEST_CASE("the four-term relation in Q^3 already vanishes on chains") {
  std::vector<Vec> four = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, -3}};
  auto rep = solomon_tits_relation(four);
  REQUIRE(rep.pass());
  CHECK(rep.relation.is_zero());
  CHECK(rep.witness->is_zero());
  CHECK_THROWS_AS(solomon_tits_relation(std::vector<Vec>{{1, 0}, {0, 1}}), DegeneracyError);
}
