#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "sah/polytope.hpp"
#include "sah/random.hpp"

using namespace sah;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Generator gen(std::vector<Vec> vs) {
  auto n = normalize(vs, vs.front().size());
  REQUIRE(n.has_value());
  REQUIRE(n->second == 1);
  return n->first;
}

Element elem(std::vector<Vec> vs) { return Element::from_tuple(vs, vs.front().size()); }

}  // namespace

TEST_CASE("normalize") {
  auto a = normalize(std::vector<Vec>{v({0, 2}), v({3, 0})}, 2);
  REQUIRE(a);
  CHECK(a->first.vectors() == std::vector<Vec>{v({0, 1}), v({1, 0})});
  CHECK(a->second == 1);
  auto b = normalize(std::vector<Vec>{v({-1, 0}), v({0, 1})}, 2);
  REQUIRE(b);
  CHECK(b->first == a->first);
  CHECK(b->second == -1);
  CHECK_FALSE(normalize(std::vector<Vec>{v({1, 1}), v({2, 2})}, 2).has_value());
  auto c = normalize(std::vector<Vec>{v({-1, 2}), v({-3, -6})}, 2);
  REQUIRE(c);
  CHECK(c->second == 1);
  CHECK(c->first.to_string() == "[(1,-2),(1,2)]");
}

TEST_CASE("mu") {
  Element e1 = elem({v({1, 0})}), e2 = elem({v({0, 1})});
  CHECK(mu(e1, e2) == elem({v({1, 0}), v({0, 1})}));
  Element x = elem({v({1, 2})});
  CHECK(mu(unit(1, 2), x) == x);
  Element a = elem({v({1, 0, 0}), v({1, 1, 0})});
  Element b = elem({v({0, 0, 1})});
  Element ab = mu(a, b);
  CHECK(ab.to_string() == "[(0,0,1),(1,0,0),(1,1,0)]");
  CHECK_THROWS_AS(mu(e1, elem({v({1, 1})})), OrthogonalityError);
}

TEST_CASE("delta") {
  Element x = elem({v({2, 3})});
  Tensor d = delta(x);
  CHECK(d.terms().size() == 2);
  CHECK(d.to_string() == "()(x)[(2,3)] + [(2,3)](x)()");

  Tensor d2 = delta(elem({v({1, 0}), v({0, 1})}));
  CHECK(d2.to_string() ==
        "()(x)[(0,1),(1,0)] + [(0,1)](x)[(1,0)] + [(1,0)](x)[(0,1)] + [(0,1),(1,0)](x)()");

  Generator g = gen({v({1, 0}), v({1, 1})});
  auto terms = coproduct_terms(g);
  REQUIRE(terms.size() == 4);
  auto it = std::find_if(terms.begin(), terms.end(),
                         [](const CoproductTerm& t) { return t.face.vectors() == std::vector<Vec>{Vec{1, 0}}; });
  REQUIRE(it != terms.end());
  CHECK(it->link.vectors() == std::vector<Vec>{v({0, 1})});
  CHECK(it->sign == 1);
}

TEST_CASE("antipode, counit, unit") {
  Element e = elem({v({1, 0}), v({0, 1})});
  CHECK(antipode(e) == e);
  CHECK(antipode(antipode(elem({v({1, 0}), v({1, 1})}))) == elem({v({1, 0}), v({1, 1})}));
  CHECK(antipode(unit(1, 3)) == unit(1, 3));
  CHECK(counit(unit(3, 2)) == 3);
  CHECK(counit(elem({v({1, 0})})) == 0);
  CHECK(unit(1, 2).to_string() == "[]");
  // dual of (1,0),(1,1) is (-1,1),(0,-1): two negations cancel.
  CHECK(antipode(elem({v({1, 0}), v({1, 1})})).to_string() == "[(0,1),(1,-1)]");
}

TEST_CASE("bialgebra examples") {
  CHECK(bialg_check(gen({v({1, 0})}), gen({v({0, 1})})));
  CHECK(bialg_check(Generator::empty(2), gen({v({1, 1})})));
  CHECK_THROWS_AS(bialg_check(gen({v({1, 0})}), gen({v({1, 1})})), OrthogonalityError);
}

TEST_CASE("boundary relation") {
  CHECK(boundary_relation(std::vector<Vec>{v({1}), v({2})}).is_zero());
  // The orientation translation sends (-1) to +[(1)], so the relation vanishes.
  CHECK(boundary_relation(std::vector<Vec>{v({1}), v({-1})}).is_zero());
  Element r = boundary_relation(std::vector<Vec>{v({1, 0}), v({0, 1}), v({1, 1})});
  CHECK(r.terms().size() == 3);
  CHECK(r.to_string() == "-[(0,1),(1,0)] + [(0,1),(1,1)] + [(1,0),(1,1)]");
  CHECK_THROWS_AS(boundary_relation(std::vector<Vec>{v({1, 0}), v({2, 0}), v({0, 1})}),
                  DegeneracyError);
}

TEST_CASE("to_ls") {
  Element e = elem({v({1, 0}), v({0, 1})});
  auto ls = to_ls(e);
  REQUIRE(ls.size() == 1);
  CHECK(ls[0].coefficient == -1);  // stored order (0,1),(1,0) is the swapped basis
  CHECK(ls[0].tuple == std::vector<Vec>{v({0, 1}), v({1, 0})});
  CHECK(from_ls(ls, e.grading()) == e);
  std::vector<OrderedTerm> canonical{{1, {v({1, 0}), v({0, 1})}}};
  CHECK(from_ls(canonical, Space::full(2)) == e);
}

TEST_CASE("property: coproduct links agree with the projection oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RatRng rng(mix_seed(seed, 21));
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    auto t = random_basis(rng, n, n + static_cast<std::size_t>(rng.integer(0, 1)));
    auto g = normalize(t, t.front().size())->first;
    for (const auto& term : coproduct_terms(g)) {
      std::vector<Vec> in_s, expect;
      for (std::size_t i = 0; i < n; ++i)
        if (term.subset >> i & 1) in_s.push_back(g.vectors()[i]);
      int sign = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (term.subset >> j & 1) continue;
        Vec p = g.vectors()[j];
        Vec q = oracle::project(in_s, p);
        for (std::size_t k = 0; k < p.size(); ++k) p[k] -= q[k];
        Vec prim = primitive(p);
        if (leading_sign(prim) < 0) {
          prim = neg(prim);
          sign = -sign;
        }
        expect.push_back(prim);
      }
      std::sort(expect.begin(), expect.end(),
                [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
      CHECK(term.link.vectors() == expect);
      CHECK(term.sign == sign);
      CHECK(term.face.vectors() == in_s);
    }
  }
}

TEST_CASE("property: product is associative and commutative") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RatRng rng(mix_seed(seed, 22));
    std::size_t dim = 4;
    auto all = random_basis(rng, 3, dim);
    Space a = span({all[0]}, dim);
    Space b = complement_in(span({all[0], all[1]}, dim), a);
    Space c = complement_in(span(all, dim), sum(a, b));
    Element x = Element::from_tuple(random_basis_in(rng, a, 1), dim);
    Element y = Element::from_tuple(random_basis_in(rng, b, 1), dim);
    Element z = Element::from_tuple(random_basis_in(rng, c, 1), dim);
    CHECK(mu(mu(x, y), z) == mu(x, mu(y, z)));
    CHECK(mu(x, y) == mu(y, x));
  }
}

TEST_CASE("property: coassociativity and counit laws") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RatRng rng(mix_seed(seed, 23));
    std::size_t n = static_cast<std::size_t>(rng.integer(0, 4));
    std::size_t dim = n + static_cast<std::size_t>(rng.integer(0, 1));
    if (dim == 0) dim = 1;
    Element x = n == 0 ? unit(1, dim) : Element::from_tuple(random_basis(rng, n, dim), dim);
    CHECK(coassociativity_check(x));
    CHECK(counit_check(x));
  }
}

TEST_CASE("property: bialgebra compatibility and antipode laws") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RatRng rng(mix_seed(seed, 24));
    std::size_t m = static_cast<std::size_t>(rng.integer(0, 3));
    std::size_t n = static_cast<std::size_t>(rng.integer(0, 3 - (m == 3 ? 1 : 0)));
    auto [dim, s, t] = orthogonal_pair(rng, m, n, static_cast<std::size_t>(rng.integer(0, 1)));
    Generator gs = s.empty() ? Generator::empty(dim) : normalize(s, dim)->first;
    Generator gt = t.empty() ? Generator::empty(dim) : normalize(t, dim)->first;
    CHECK(bialg_check(gs, gt));
    Element x = Element::of(gs), y = Element::of(gt);
    CHECK(antipode(mu(x, y)) == mu(antipode(x), antipode(y)));
    CHECK(antipode(antipode(mu(x, y))) == mu(x, y));
  }
}

TEST_CASE("property: to_ls round trip") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RatRng rng(mix_seed(seed, 25));
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    auto t = random_basis(rng, n, 3);
    Space vsp = span(t, 3);
    Element x(vsp);
    for (int k = 0; k < 3; ++k)
      x += static_cast<Coeff>(rng.integer(-3, 3)) * Element::from_tuple(random_basis_in(rng, vsp, n), 3);
    CHECK(from_ls(to_ls(x), vsp) == x);
    for (const auto& term : to_ls(x)) CHECK(orientation_sign(term.tuple, vsp) * term.coefficient ==
                                           x.coefficient(normalize(term.tuple, 3)->first));
  }
}
