#include "doctest.h"
#include "sah/random.hpp"
#include "sah/spherical.hpp"

using namespace sah;

namespace {

constexpr long kBits = 256;
const Int kHeight(1000000);

// Frozen from an independent 80-digit evaluation.
const char* kD1 = "1.30810008120041704244452315414165516096718503055082273694070228238293560";
const char* kArccosThird = "1.23095941734077468213492917824798737571034000935509483905554833366399231";

BigFloat dot4(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b) {
  BigFloat s(kBits);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

Angle random_side(RatRng& rng, long bits) {
  // a = t * arccos(-1/3) with t in [1/100, 99/100]
  Rat t = ratio(static_cast<long>(rng.integer(1, 99)), 100);
  return Angle::numeric(acos(BigFloat(Rat(-1, 3), bits)) * BigFloat(t, bits));
}

bool near(const BigFloat& a, const BigFloat& b, long e) { return abs(a - b) < ldexp(BigFloat(1, a.precision()), -e); }

}  // namespace

TEST_CASE("BigFloat basics") {
  BigFloat x = BigFloat::parse("0.25", kBits);
  CHECK(x == BigFloat(Rat(1, 4), kBits));
  CHECK((x + x).to_string(3) == "0.500");
  CHECK(BigFloat(-1, kBits).scaled_round(3) == -8);
  CHECK(BigFloat(Rat(5, 2), kBits).scaled_round(0) == 3);
  CHECK_THROWS_AS(BigFloat::parse("abc", kBits), ParseError);
  CHECK(near(cos(BigFloat::pi(kBits)), BigFloat(-1, kBits), 250));
}

TEST_CASE("angle expressions") {
  Angle half = parse_angle("pi/2", kBits);
  REQUIRE(half.pi_rational);
  CHECK(*half.pi_rational == Rat(1, 2));
  CHECK(*half.exact_cos == 0);
  Angle third = parse_angle("arccos(1/2)", kBits);
  CHECK(*third.pi_rational == Rat(1, 3));
  Angle big = parse_angle("arccos(-1/3)", kBits);
  CHECK_FALSE(big.pi_rational);
  CHECK(*big.exact_cos == Rat(-1, 3));
  CHECK(near(parse_angle("1e-6", kBits).value, BigFloat(Rat(1, 1000000), kBits), 250));
  CHECK(near(parse_angle("2*pi/3 - pi/6", kBits).value, half.value, 250));
  CHECK(*parse_angle("2*pi/3 - pi/6", kBits).pi_rational == Rat(1, 2));
  CHECK_FALSE(parse_angle("arccos(-1/3) - 0.001", kBits).exact_cos);
  CHECK(parse_angle(" 0 ", kBits).pi_rational == Rat(0));
  CHECK_THROWS_AS(parse_angle("pi/", kBits), ParseError);
  CHECK_THROWS_AS(parse_angle("sin(1)", kBits), ParseError);
  CHECK_THROWS_AS(parse_angle("4", kBits), GeometryError);
  CHECK_THROWS_AS(parse_angle("arccos(2)", kBits), GeometryError);
  CHECK(half.to_string() == "pi/2");
  CHECK(Angle::pi_multiple(Rat(2, 3), kBits).to_string() == "2*pi/3");
}

TEST_CASE("regular tetrahedra") {
  SUBCASE("right-angled") {
    auto s = regular_tetra(parse_angle("pi/2", kBits), kBits);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(near(dot4(s.vertices[i], s.vertices[j]), BigFloat(i == j ? 1 : 0, kBits), 248));
    Angle d = dihedral(s, {0, 1});
    REQUIRE(d.pi_rational);
    CHECK(*d.pi_rational == Rat(1, 2));
  }
  SUBCASE("pi/3 has Gram off-diagonal 1/2") {
    auto s = regular_tetra(parse_angle("pi/3", kBits), kBits);
    CHECK(near(dot4(s.vertices[0], s.vertices[3]), BigFloat(Rat(1, 2), kBits), 248));
    Angle f = tetra_dihedral_formula(parse_angle("pi/3", kBits), kBits);
    CHECK(*f.exact_cos == Rat(1, 4));
    CHECK(near(dihedral(s, {1, 2}).value, f.value, 240));
  }
  SUBCASE("range") {
    CHECK_THROWS_AS(regular_tetra(parse_angle("arccos(-1/3)", kBits), kBits), GeometryError);
    CHECK_THROWS_AS(regular_tetra(parse_angle("0", kBits), kBits), GeometryError);
    CHECK_THROWS_AS(regular_tetra(parse_angle("2", kBits), kBits), GeometryError);
    CHECK_THROWS_AS(tetra_dihedral_formula(parse_angle("arccos(-1/3)", kBits), kBits), GeometryError);
  }
  SUBCASE("small side approaches the Euclidean angle") {
    Angle a = parse_angle("1e-6", kBits);
    Angle d = dihedral(regular_tetra(a, kBits), {0, 1});
    CHECK(abs(cos(d.value) - BigFloat(Rat(1, 3), kBits)) < BigFloat::parse("1e-5", kBits));
    CHECK(abs(d.value - BigFloat::parse(kArccosThird, kBits)) < BigFloat::parse("1e-6", kBits));
  }
  SUBCASE("large side approaches pi") {
    BigFloat prev(0, kBits);
    for (const char* eps : {"1e-2", "1e-4", "1e-8", "1e-16"}) {
      Angle a = parse_angle(std::string("arccos(-1/3) - ") + eps, kBits);
      Angle d = tetra_dihedral_formula(a, kBits);
      CHECK(d.value > prev);
      prev = d.value;
    }
    CHECK(BigFloat::pi(kBits) - prev < BigFloat::parse("1e-7", kBits));
  }
  SUBCASE("one radian against the frozen value") {
    Angle a = parse_angle("1", kBits);
    Angle d = dihedral(regular_tetra(a, kBits), {2, 3});
    CHECK(near(d.value, tetra_dihedral_formula(a, kBits).value, 200));
    CHECK(near(d.value, BigFloat::parse(kD1, kBits), 220));
  }
}

TEST_CASE("property: dihedral agrees with the formula and edges are equal") {
  std::vector<std::pair<BigFloat, BigFloat>> samples;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RatRng rng(mix_seed(seed, 21));
    Angle a = random_side(rng, kBits);
    auto s = regular_tetra(a, kBits);
    Angle f = tetra_dihedral_formula(a, kBits);
    for (const auto& e : s.edges) {
      CHECK(near(dihedral(s, e).value, f.value, kBits - 16));
      Angle l = edge_length(s, e);
      CHECK(near(l.value, a.value, kBits - 16));
    }
    CHECK(f.value >= BigFloat::parse(kArccosThird, kBits) - BigFloat::parse("1e-60", kBits));
    CHECK(f.value < BigFloat::pi(kBits));
    samples.emplace_back(a.value, f.value);
  }
  // D increases with a.
  std::sort(samples.begin(), samples.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i + 1 < samples.size(); ++i)
    if (samples[i].first < samples[i + 1].first) CHECK(samples[i].second < samples[i + 1].second);
}

TEST_CASE("integer relations") {
  BigFloat pi = BigFloat::pi(kBits);
  auto r = integer_relation({pi, pi / BigFloat(3, kBits)}, kHeight, kBits);
  REQUIRE(r);
  CHECK(*r == std::vector<Int>{1, -3});

  auto q = find_relation({BigFloat(1, kBits), BigFloat(Rat(1, 2), kBits), BigFloat(Rat(1, 3), kBits)},
                         kHeight, kBits);
  REQUIRE(q.relation);
  Rat sum = Rat((*q.relation)[0]) + Rat((*q.relation)[1]) / 2 + Rat((*q.relation)[2]) / 3;
  CHECK(sum == 0);

  auto none = find_relation({BigFloat(1, kBits), pi}, kHeight, kBits);
  CHECK_FALSE(none.relation);
  CHECK(none.certified_none);
  CHECK(none.norm_bound_log2 > none.relation_norm_log2);

  CHECK_THROWS_AS(find_relation({pi, pi}, kHeight, 64), PrecisionError);
  CHECK_THROWS_AS(find_relation({pi, pi}, kHeight, 512), PrecisionError);
  std::vector<BigFloat> many(8, BigFloat(1, 128));
  CHECK_THROWS_AS(find_relation(many, kHeight, 128), PrecisionError);
}

TEST_CASE("property: planted relations are recovered") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RatRng rng(mix_seed(seed, 22));
    BigFloat x = BigFloat::pi(kBits) / BigFloat(7, kBits) + BigFloat(Rat(static_cast<long>(seed + 1), 13), kBits);
    BigFloat y = sqrt(BigFloat(static_cast<long>(seed + 2), kBits));
    long p = static_cast<long>(rng.integer(1, 50)), q = static_cast<long>(rng.integer(-50, 50));
    BigFloat z = BigFloat(p, kBits) * x + BigFloat(q, kBits) * y;
    auto r = integer_relation({x, y, z}, kHeight, kBits);
    REQUIRE(r);
    BigFloat s = BigFloat(Rat((*r)[0]), kBits) * x + BigFloat(Rat((*r)[1]), kBits) * y +
                 BigFloat(Rat((*r)[2]), kBits) * z;
    CHECK(abs(s) < ldexp(BigFloat(1, kBits), -kBits / 2));
    CHECK((*r)[2] != 0);
  }
}

TEST_CASE("Dehn invariants of regular tetrahedra") {
  SUBCASE("generic side merges to one term") {
    auto t = dehn_invariant(regular_tetra(parse_angle("1", kBits), kBits));
    REQUIRE(t.terms.size() == 1);
    CHECK(t.terms[0].coefficient == 6);
    auto red = reduce_tensor(t, kHeight, kBits);
    REQUIRE(red.terms.size() == 1);
    CHECK(red.terms[0].coefficient == 6);
  }
  SUBCASE("right-angled reduces to zero") {
    auto t = dehn_invariant(regular_tetra(parse_angle("pi/2", kBits), kBits));
    REQUIRE(t.terms.size() == 1);
    CHECK(t.terms[0].coefficient == 6);
    CHECK(reduce_tensor(t, kHeight, kBits).is_zero());
    CHECK(reduce_tensor(t, kHeight, kBits).to_string() == "0");
  }
  SUBCASE("merging and pi-rational detection without tags") {
    Angle a = parse_angle("1", kBits), d = parse_angle("1.3", kBits);
    DehnTensor t{{{1, a, d}, {1, a, d}}};
    auto red = reduce_tensor(t, kHeight, kBits);
    REQUIRE(red.terms.size() == 1);
    CHECK(red.terms[0].coefficient == 2);

    Angle untagged = Angle::numeric(BigFloat::pi(kBits) * BigFloat(Rat(2, 5), kBits));
    DehnTensor u{{{3, a, untagged}}};
    CHECK(reduce_tensor(u, kHeight, kBits).is_zero());

    // a and a + pi/5 agree mod piQ.
    Angle shifted = Angle::numeric(a.value + BigFloat::pi(kBits) / BigFloat(5, kBits));
    DehnTensor w{{{1, a, d}, {-1, shifted, d}}};
    CHECK(reduce_tensor(w, kHeight, kBits).is_zero());
  }
}

TEST_CASE("property: reduce_tensor is idempotent") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RatRng rng(mix_seed(seed, 23));
    DehnTensor t;
    std::vector<Angle> pool{parse_angle("1", kBits), parse_angle("pi/3", kBits), parse_angle("arccos(1/3)", kBits),
                            parse_angle("1 + pi/4", kBits), parse_angle("0.7", kBits)};
    for (int k = 0; k < 4; ++k)
      t.terms.push_back({rng.integer(-3, 3), pool[static_cast<std::size_t>(rng.integer(0, 4))],
                         pool[static_cast<std::size_t>(rng.integer(0, 4))]});
    auto once = reduce_tensor(t, kHeight, kBits);
    auto twice = reduce_tensor(once, kHeight, kBits);
    CHECK(once.to_string() == twice.to_string());
  }
}

TEST_CASE("cocommutativity test") {
  const long bits = 300;
  SUBCASE("one radian is a witness") {
    auto t = dehn_invariant(regular_tetra(parse_angle("1", bits), bits));
    auto rep = cocomm_test(t, kHeight, bits);
    CHECK_FALSE(rep.equal);
    CHECK(rep.certified);
    CHECK(rep.basis.size() == 2);
    REQUIRE(rep.searches.size() == 2);
    CHECK(rep.searches.back().count == 3);
    CHECK_FALSE(rep.searches.back().relation);
    CHECK(rep.matrix == std::vector<std::vector<Rat>>{{Rat(0), Rat(6)}, {Rat(0), Rat(0)}});

    auto mirror = cocomm_test(swap(t), kHeight, bits);
    CHECK(mirror.matrix == rep.swapped);
    CHECK(mirror.swapped == rep.matrix);
  }
  SUBCASE("right angle is equal") {
    auto t = dehn_invariant(regular_tetra(parse_angle("pi/2", bits), bits));
    auto rep = cocomm_test(t, kHeight, bits);
    CHECK(rep.equal);
    CHECK(rep.reduced.is_zero());
  }
  SUBCASE("symmetric tensors") {
    Angle x = parse_angle("1", bits), y = parse_angle("arccos(1/3)", bits);
    CHECK(cocomm_test(DehnTensor{{{1, x, x}}}, kHeight, bits).equal);
    CHECK(cocomm_test(DehnTensor{{{1, x, y}, {1, y, x}}}, kHeight, bits).equal);
    CHECK_FALSE(cocomm_test(DehnTensor{{{1, x, y}}}, kHeight, bits).equal);
    // 2x (x) y = x (x) 2y even though the factors differ.
    Angle two_x = parse_angle("2", bits), two_y = parse_angle("2*arccos(1/3)", bits);
    CHECK(cocomm_test(DehnTensor{{{1, two_x, y}, {1, y, two_x}}}, kHeight, bits).equal);
    auto rep = cocomm_test(DehnTensor{{{1, two_x, y}, {-1, x, two_y}}}, kHeight, bits);
    CHECK(rep.equal);
    for (const auto& row : rep.matrix)
      for (const auto& v : row) CHECK(v == 0);
  }
}
