#include "sah/stepfn.hpp"

#include <algorithm>
#include <numeric>

#include "sah/random.hpp"

namespace sah {

StepFn::StepFn(Space ambient, std::vector<Step> steps) : ambient_(std::move(ambient)) {
  if (steps.empty()) throw DegeneracyError("step function without steps");
  Rat total = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (s.length <= 0) throw DegeneracyError("step function with a non-positive step length");
    if (s.value.ambient_dim() != ambient_.ambient_dim())
      throw AmbientError("step value in a different ambient");
    if (!ambient_.contains(s.value))
      throw ContainmentError("step value " + s.value.to_string() + " outside " + ambient_.to_string());
    if (i && !s.value.contains(steps[i - 1].value))
      throw ContainmentError("step values are not increasing");
    total += s.length;
  }
  if (total != 1) throw DegeneracyError("step lengths sum to " + sah::to_string(total));
  for (auto& s : steps) {
    if (!steps_.empty() && steps_.back().value == s.value)
      steps_.back().length += s.length;
    else
      steps_.push_back(std::move(s));
  }
  basepoint_ = !steps_.front().value.is_zero() || steps_.back().value != ambient_;
}

StepFn StepFn::from_cuts(Space ambient, const std::vector<Rat>& cuts, std::vector<Space> values) {
  if (values.size() != cuts.size() + 1)
    throw DegeneracyError("from_cuts: need one more value than cut points");
  std::vector<Step> steps;
  Rat prev = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    Rat next = i < cuts.size() ? cuts[i] : Rat(1);
    steps.push_back({next - prev, std::move(values[i])});
    prev = next;
  }
  return StepFn(std::move(ambient), std::move(steps));
}

std::vector<Rat> StepFn::cut_points() const {
  std::vector<Rat> out;
  Rat pos = 0;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    pos += steps_[i].length;
    out.push_back(pos);
  }
  return out;
}

bool StepFn::is_cut_point(const Rat& x) const {
  Rat pos = 0;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    pos += steps_[i].length;
    if (pos == x) return true;
    if (pos > x) break;
  }
  return false;
}

const Space& StepFn::value_at(const Rat& x) const {
  Rat pos = 0;
  for (const auto& s : steps_) {
    pos += s.length;
    if (x < pos) return s.value;
  }
  return steps_.back().value;
}

StepFn StepFn::restrict(const Rat& a, const Rat& b) const {
  if (!(a < b)) throw DegeneracyError("restrict: empty interval");
  const Rat width = b - a;
  std::vector<Step> out;
  Rat lo = 0;
  for (const auto& s : steps_) {
    Rat hi = lo + s.length;
    Rat from = std::max(lo, a), to = std::min(hi, b);
    if (from < to) out.push_back({Rat((to - from) / width), s.value});
    lo = hi;
  }
  return StepFn(ambient_, std::move(out));
}

std::vector<Space> StepFn::values() const {
  std::vector<Space> out;
  for (const auto& s : steps_) out.push_back(s.value);
  return out;
}

std::string StepFn::to_string() const {
  std::string s = "{";
  Rat pos = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) s += ", ";
    Rat next = pos + steps_[i].length;
    s += "[" + sah::to_string(pos) + "," + sah::to_string(next) + "]->" + steps_[i].value.to_string();
    pos = next;
  }
  s += "}";
  if (basepoint_) s += "*";
  return s;
}

bool same_point(const StepFn& a, const StepFn& b) {
  if (a.is_basepoint() && b.is_basepoint()) return true;
  return a == b;
}

StepFn stepfn_oplus(const StepFn& phi, const StepFn& psi) {
  if (!are_orthogonal(phi.ambient(), psi.ambient()))
    throw OrthogonalityError("stepfn_oplus: ambients are not orthogonal");
  std::vector<Step> out;
  const auto& p = phi.steps();
  const auto& q = psi.steps();
  std::size_t i = 0, j = 0;
  Rat end_p = p[0].length, end_q = q[0].length, pos = 0;
  while (i < p.size() && j < q.size()) {
    Rat next = std::min(end_p, end_q);
    out.push_back({next - pos, sum(p[i].value, q[j].value)});
    pos = next;
    if (end_p == next && ++i < p.size()) end_p += p[i].length;
    if (end_q == next && ++j < q.size()) end_q += q[j].length;
  }
  return StepFn(sum(phi.ambient(), psi.ambient()), std::move(out));
}

// ---------------------------------------------------------------------------
// Cut systems

CutSystem::CutSystem(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_)
    if (!(0 <= iv.a && iv.a < iv.b && iv.b <= 1))
      throw DegeneracyError("little interval [" + sah::to_string(iv.a) + "," +
                            sah::to_string(iv.b) + "] is not inside [0,1]");
  std::vector<Interval> sorted = intervals_;
  std::sort(sorted.begin(), sorted.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (sorted[k].a < sorted[k - 1].b) throw DegeneracyError("little intervals overlap");
}

CutSystem CutSystem::permuted(const std::vector<std::size_t>& perm) const {
  std::vector<Interval> out;
  for (auto k : perm) out.push_back(intervals_.at(k));
  return CutSystem(std::move(out));
}

std::string CutSystem::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) s += ",";
    s += "[" + sah::to_string(intervals_[i].a) + "," + sah::to_string(intervals_[i].b) + "]";
  }
  return s + ")";
}

CutSystem operad_compose(const CutSystem& e, const std::vector<CutSystem>& fs) {
  if (fs.size() != e.arity()) throw DegeneracyError("operad_compose: arity mismatch");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& [a, b] = e.intervals()[i];
    for (const auto& iv : fs[i].intervals())
      out.push_back({Rat(a + (b - a) * iv.a), Rat(a + (b - a) * iv.b)});
  }
  return CutSystem(std::move(out));
}

// ---------------------------------------------------------------------------
// Cut map

std::optional<ThetaResult> theta(const CutSystem& e, const StepFn& phi) {
  if (phi.is_basepoint()) return std::nullopt;
  const std::size_t n = e.arity();
  const Space& v = phi.ambient();
  if (n == 0) {
    if (!v.is_zero()) return std::nullopt;
    return ThetaResult{};
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return e.intervals()[x].b < e.intervals()[y].b; });

  ThetaResult out;
  out.factors.resize(n, phi);
  Space prev = Space::zero(v.ambient_dim());
  for (std::size_t r = 0; r < n; ++r) {
    const auto& [a, b] = e.intervals()[order[r]];
    if (phi.is_cut_point(b)) return std::nullopt;
    Space u = r + 1 == n ? v : phi.value_at(b);
    StepFn piece = phi.restrict(a, b);
    std::vector<Step> steps;
    for (const auto& s : piece.steps()) {
      if (!s.value.contains(prev) || !u.contains(s.value)) return std::nullopt;
      steps.push_back({s.length, complement_in(s.value, prev)});
    }
    StepFn factor(complement_in(u, prev), std::move(steps));
    if (factor.is_basepoint()) return std::nullopt;
    out.factors[order[r]] = std::move(factor);
    out.flag.push_back(u);
    prev = std::move(u);
  }
  return out;
}

bool prod_coprod_check(const StepFn& phi, const StepFn& psi, const CutSystem& e) {
  auto whole = theta(e, stepfn_oplus(phi, psi));
  auto left = theta(e, phi), right = theta(e, psi);
  if (!left || !right) return !whole;
  if (!whole) return false;
  for (std::size_t r = 0; r < whole->flag.size(); ++r)
    if (whole->flag[r] != sum(left->flag[r], right->flag[r])) return false;
  for (std::size_t i = 0; i < e.arity(); ++i)
    if (whole->factors[i] != stepfn_oplus(left->factors[i], right->factors[i])) return false;
  return true;
}

bool operad_theta_check(const CutSystem& e, const std::vector<CutSystem>& fs, const StepFn& phi) {
  auto direct = theta(operad_compose(e, fs), phi);
  std::optional<std::vector<StepFn>> iterated;
  if (auto outer = theta(e, phi)) {
    iterated.emplace();
    for (std::size_t i = 0; i < fs.size() && iterated; ++i) {
      auto inner = theta(fs[i], outer->factors[i]);
      if (!inner)
        iterated.reset();
      else
        iterated->insert(iterated->end(), inner->factors.begin(), inner->factors.end());
    }
  }
  if (!direct || !iterated) return !direct && !iterated;
  return direct->factors == *iterated;
}

// ---------------------------------------------------------------------------
// Seeded generators

namespace {

Rat random_unit_rat(RatRng& rng, long den) {
  long d = static_cast<long>(rng.integer(2, den));
  return ratio(static_cast<long>(rng.integer(1, d - 1)), d);
}

}  // namespace

StepFn random_stepfn(RatRng& rng, const Space& ambient) {
  std::size_t r = ambient.rank();
  auto basis = random_basis_in(rng, ambient, r);
  std::vector<Space> values{Space::zero(ambient.ambient_dim())};
  for (std::size_t i = 1; i <= r; ++i) {
    if (i < r && rng.coin()) continue;
    values.push_back(span(std::vector<Vec>(basis.begin(), basis.begin() + static_cast<long>(i)),
                          ambient.ambient_dim()));
  }
  std::vector<Rat> cuts;
  while (cuts.size() + 1 < values.size()) {
    Rat c = random_unit_rat(rng, 12);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  return StepFn::from_cuts(ambient, cuts, values);
}

CutSystem random_cuts(RatRng& rng, std::size_t arity) {
  std::vector<Rat> pts;
  while (pts.size() < 2 * arity) {
    Rat c = rng.integer(0, 5) == 0 ? Rat(static_cast<long>(rng.integer(0, 1))) : random_unit_rat(rng, 16);
    pts.push_back(c);
    std::sort(pts.begin(), pts.end());
    // Intervals may touch but the two ends of one interval must differ.
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
      if (pts[i] == pts[i + 1]) {
        pts.erase(pts.begin() + static_cast<long>(i));
        break;
      }
  }
  std::vector<Interval> iv;
  for (std::size_t i = 0; i < arity; ++i) iv.push_back({pts[2 * i], pts[2 * i + 1]});
  std::shuffle(iv.begin(), iv.end(), rng.engine());
  return CutSystem(iv);
}

}  // namespace sah
