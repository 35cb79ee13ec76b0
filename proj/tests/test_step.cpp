#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sah/random.hpp"
#include "sah/stepfn.hpp"

using namespace sah;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Space line(std::initializer_list<long> xs) { return span({v(xs)}, xs.size()); }

// phi: [0,1/3] -> 0, [1/3,2/3] -> <e1>, [2/3,1] -> Q^2
StepFn worked_phi() {
  return StepFn::from_cuts(Space::full(2), {Rat(1, 3), Rat(2, 3)},
                           {Space::zero(2), line({1, 0}), Space::full(2)});
}

}  // namespace

TEST_CASE("step function normal form and basepoint flag") {
  StepFn phi = worked_phi();
  CHECK_FALSE(phi.is_basepoint());
  CHECK(phi.cut_points() == std::vector<Rat>{Rat(1, 3), Rat(2, 3)});
  StepFn merged = StepFn::from_cuts(Space::full(2), {Rat(1, 4), Rat(1, 2)},
                                    {Space::zero(2), Space::zero(2), Space::full(2)});
  CHECK(merged.steps().size() == 2);
  CHECK(merged.cut_points() == std::vector<Rat>{Rat(1, 2)});
  CHECK(StepFn(merged.ambient(), merged.steps()) == merged);
  StepFn late = StepFn::from_cuts(Space::full(2), {Rat(1, 2)}, {Space::zero(2), line({1, 0})});
  CHECK(late.is_basepoint());
  CHECK_THROWS_AS(StepFn::from_cuts(Space::full(2), {Rat(1, 2)}, {line({1, 0}), line({0, 1})}),
                  ContainmentError);
}

TEST_CASE("stepfn_oplus") {
  StepFn phi = StepFn::from_cuts(line({1, 0, 0}), {Rat(1, 3)}, {Space::zero(3), line({1, 0, 0})});
  StepFn psi = StepFn::from_cuts(span({v({0, 1, 0}), v({0, 0, 1})}, 3), {Rat(1, 2)},
                                 {Space::zero(3), span({v({0, 1, 0}), v({0, 0, 1})}, 3)});
  StepFn s = stepfn_oplus(phi, psi);
  CHECK(s.cut_points() == std::vector<Rat>{Rat(1, 3), Rat(1, 2)});
  CHECK(s.values() == std::vector<Space>{Space::zero(3), line({1, 0, 0}), Space::full(3)});
  CHECK(stepfn_oplus(psi, phi) == s);
  CHECK_THROWS_AS(stepfn_oplus(phi, phi), OrthogonalityError);
}

TEST_CASE("theta examples") {
  auto res = theta(CutSystem::halves(), worked_phi());
  REQUIRE(res);
  CHECK(res->flag == std::vector<Space>{line({1, 0}), Space::full(2)});
  CHECK(res->factors[0] == StepFn::from_cuts(line({1, 0}), {Rat(2, 3)}, {Space::zero(2), line({1, 0})}));
  CHECK(res->factors[1] == StepFn::from_cuts(line({0, 1}), {Rat(1, 3)}, {Space::zero(2), line({0, 1})}));

  StepFn cut_at_half = StepFn::from_cuts(Space::full(2), {Rat(1, 2)}, {Space::zero(2), Space::full(2)});
  CHECK_FALSE(theta(CutSystem::halves(), cut_at_half).has_value());

  auto unit = theta(CutSystem::unit(), worked_phi());
  REQUIRE(unit);
  CHECK(unit->factors[0] == worked_phi());

  CHECK_FALSE(theta(CutSystem({}), worked_phi()).has_value());
  StepFn zero_fn(Space::zero(2), {{Rat(1), Space::zero(2)}});
  CHECK(theta(CutSystem({}), zero_fn).has_value());
}

TEST_CASE("operad composition") {
  CutSystem e = CutSystem::halves();
  CHECK(operad_compose(e, {CutSystem::unit(), CutSystem::unit()}) == e);
  CHECK(operad_compose(CutSystem::unit(), {e}) == e);
  CutSystem c = operad_compose(e, {CutSystem::unit(), e});
  CHECK(c == CutSystem({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(3, 4)}, {Rat(3, 4), Rat(1)}}));
  CHECK_THROWS_AS(CutSystem({{Rat(0), Rat(2, 3)}, {Rat(1, 2), Rat(1)}}), DegeneracyError);
}

TEST_CASE("property: operad composition is associative") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RatRng rng(mix_seed(seed, 41));
    CutSystem e = random_cuts(rng, 2);
    std::vector<CutSystem> f{random_cuts(rng, 1), random_cuts(rng, 2)};
    std::vector<CutSystem> g{random_cuts(rng, 1), random_cuts(rng, 2), random_cuts(rng, 1)};
    CutSystem left = operad_compose(operad_compose(e, f), g);
    CutSystem right = operad_compose(
        e, {operad_compose(f[0], {g[0]}), operad_compose(f[1], {g[1], g[2]})});
    CHECK(left == right);
  }
}

TEST_CASE("property: theta equivariance, operad compatibility and products") {
  std::size_t nondegenerate = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RatRng rng(mix_seed(seed, 42));
    std::size_t dim = static_cast<std::size_t>(rng.integer(1, 4));
    StepFn phi = random_stepfn(rng, Space::full(dim));
    std::size_t arity = static_cast<std::size_t>(rng.integer(1, 3));
    CutSystem e = random_cuts(rng, arity);

    std::vector<std::size_t> perm(arity);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    auto base = theta(e, phi), moved = theta(e.permuted(perm), phi);
    REQUIRE(base.has_value() == moved.has_value());
    if (base) {
      ++nondegenerate;
      CHECK(moved->flag == base->flag);
      for (std::size_t i = 0; i < arity; ++i) CHECK(moved->factors[i] == base->factors[perm[i]]);
    }

    std::vector<CutSystem> fs;
    for (std::size_t i = 0; i < arity; ++i)
      fs.push_back(random_cuts(rng, static_cast<std::size_t>(rng.integer(1, 4 - static_cast<long>(arity)))));
    CHECK(operad_theta_check(e, fs, phi));

    std::size_t split = static_cast<std::size_t>(rng.integer(0, static_cast<long>(dim)));
    auto basis = random_basis(rng, dim, dim);
    Space a = span(std::vector<Vec>(basis.begin(), basis.begin() + static_cast<long>(split)), dim);
    Space b = complement_in(Space::full(dim), a);
    CHECK(prod_coprod_check(random_stepfn(rng, a), random_stepfn(rng, b), e));
  }
  CHECK(nondegenerate > 20);
}
