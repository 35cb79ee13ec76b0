#include "sah/cover.hpp"

#include "sah/random.hpp"

namespace sah {

std::optional<ConeWitness> LocateResult::strict() const {
  std::optional<ConeWitness> found;
  for (const auto& w : witnesses) {
    if (!w.strict) continue;
    if (found) return std::nullopt;
    found = w;
  }
  return found;
}

Locator::Locator(std::vector<Vec> t) : t_(std::move(t)) {
  if (t_.empty()) {
    to_cone_.push_back({});
    return;
  }
  if (!is_independent(t_)) throw DegeneracyError("locate: basis vectors are dependent");
  const std::size_t n = t_.size();
  if (n > 20) throw DegeneracyError("locate: too many vectors for subset enumeration");
  span_ = span(t_, t_.front().size());
  duals_ = dual_tuple(t_);
  std::vector<Vec> dual_coords;
  for (const auto& d : duals_) dual_coords.push_back(solve_in_basis(t_, d));
  to_cone_.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Mat m(n, Vec(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t row = 0; row < n; ++row)
        m[row][k] = (mask >> k & 1) ? Rat(row == k ? 1 : 0) : dual_coords[k][row];
    to_cone_.push_back(inverse(m));
  }
}

Vec Locator::cone_coordinates(std::uint64_t subset, const Vec& r) const {
  return mat_vec(to_cone_[subset], r);
}

LocateResult Locator::locate_coords(const Vec& r) const {
  const std::size_t n = t_.size();
  LocateResult out;
  for (std::uint64_t mask = 0; mask < to_cone_.size(); ++mask) {
    Vec c = cone_coordinates(mask, r);
    bool nonneg = true, strict = true;
    for (const auto& x : c) {
      int s = sgn(x);
      if (s < 0) nonneg = false;
      if (s <= 0) strict = false;
    }
    if (!nonneg) continue;
    ConeWitness w;
    w.subset = mask;
    w.strict = strict;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i & 1) ? w.a : w.b).push_back(c[i]);
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

LocateResult Locator::locate(const Vec& x) const {
  if (t_.empty()) {
    if (!is_zero(x)) throw AmbientError("locate: point outside the zero span");
    return locate_coords({});
  }
  if (!span_.contains(x)) throw AmbientError("locate: point " + to_string(x) + " outside span");
  return locate_coords(solve_in_basis(t_, x));
}

LocateResult locate(const Vec& x, std::span<const Vec> t) {
  return Locator({t.begin(), t.end()}).locate(x);
}

// ---------------------------------------------------------------------------
// Covering

namespace {

Vec sample_coords(std::size_t n, std::uint64_t seed, std::size_t k) {
  RatRng rng(mix_seed(seed, k));
  Vec r(n);
  for (auto& x : r) x = rng.rational(kPointHeight, kPointHeight);
  return r;
}

struct SampleOutcome {
  std::size_t nonneg = 0;
  std::size_t strict = 0;
};

SampleOutcome classify(const Locator& loc, std::uint64_t seed, std::size_t k) {
  const std::size_t n = loc.size();
  Vec r = sample_coords(n, seed, k);
  SampleOutcome o;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Vec c = loc.cone_coordinates(mask, r);
    int lo = 1;
    for (const auto& x : c) lo = std::min(lo, sgn(x));
    if (lo >= 0) ++o.nonneg;
    if (lo > 0) ++o.strict;
  }
  return o;
}

CoverReport fold(const std::vector<SampleOutcome>& outcomes, std::span<const Vec> t,
                 std::uint64_t seed) {
  CoverReport rep;
  rep.samples = outcomes.size();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    if (o.nonneg > 0) ++rep.covered;
    if (o.strict == 1) ++rep.unique_strict;
    if (o.strict == 0) ++rep.ties;
    if (o.strict > 1) ++rep.overlaps;
    if ((o.nonneg == 0 || o.strict > 1) && !rep.counterexample) {
      rep.counterexample = k;
      rep.counterexample_point = cover_sample(t, seed, k);
    }
  }
  return rep;
}

}  // namespace

Vec cover_sample(std::span<const Vec> t, std::uint64_t seed, std::size_t k) {
  if (t.empty()) return {};
  Vec r = sample_coords(t.size(), seed, k);
  Vec x = zero_vec(t.front().size());
  for (std::size_t i = 0; i < t.size(); ++i) x = add(x, scale(r[i], t[i]));
  return x;
}

CoverReport cover_check_serial(std::span<const Vec> t, std::size_t samples, std::uint64_t seed) {
  Locator loc({t.begin(), t.end()});
  std::vector<SampleOutcome> outcomes(samples);
  for (std::size_t k = 0; k < samples; ++k) outcomes[k] = classify(loc, seed, k);
  return fold(outcomes, t, seed);
}

CoverReport cover_check(std::span<const Vec> t, std::size_t samples, std::uint64_t seed) {
  Locator loc({t.begin(), t.end()});
  std::vector<SampleOutcome> outcomes(samples);
  const long long count = static_cast<long long>(samples);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long k = 0; k < count; ++k)
    outcomes[static_cast<std::size_t>(k)] = classify(loc, seed, static_cast<std::size_t>(k));
  return fold(outcomes, t, seed);
}

// ---------------------------------------------------------------------------
// Hopf identity

HopfReport hopf_check(std::span<const Vec> t, std::size_t samples, std::uint64_t seed) {
  if (t.empty()) throw DegeneracyError("hopf_check needs at least one vector");
  const std::size_t dim = t.front().size();
  auto base = normalize(t, dim);
  if (!base) throw DegeneracyError("hopf_check: vectors are dependent");
  const Generator& g = base->first;
  const std::size_t n = g.size();
  const std::vector<Vec> duals = dual_tuple(g.vectors());

  HopfReport rep;
  rep.n = n;
  rep.e1 = Element(g.ambient());
  rep.expected = Element(g.ambient());
  rep.e2 = Element(g.ambient());
  rep.termwise = true;

  for (const auto& term : coproduct_terms(g)) {
    const int c = base->second * term.sign;

    Element face = Element::of(term.face);
    Element link = Element::of(term.link);
    Element left = c * mu(face, antipode(link));
    rep.e1 += left;
    rep.e2 += c * mu(antipode(face), link);

    std::vector<Vec> cone;
    for (std::size_t i = 0; i < n; ++i)
      cone.push_back((term.subset >> i & 1) ? g.vectors()[i] : duals[i]);
    Element want = base->second * Element::from_tuple(cone, dim);
    rep.expected += want;
    if (left != want && rep.termwise) {
      rep.termwise = false;
      rep.mismatch = SubsetMismatch{term.subset, left, want};
    }
  }
  if (rep.termwise && rep.e1 != rep.expected) rep.termwise = false;
  rep.transport = antipode(rep.e2) == rep.e1;
  rep.cover = cover_check(g.vectors(), samples, seed);
  return rep;
}

}  // namespace sah
