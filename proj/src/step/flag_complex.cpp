#include "sah/flag_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sah/stepfn.hpp"

namespace sah {

// ---------------------------------------------------------------------------
// Chains

void Chain::add(const Flag& f, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.degree != degree && !o.is_zero() && !is_zero())
    throw DegeneracyError("adding chains of different degrees");
  if (is_zero()) degree = o.degree;
  for (const auto& [f, c] : o.terms) add(f, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  return *this += (-1) * o;
}

Chain operator*(Coeff k, Chain c) {
  if (k == 0) c.terms.clear();
  for (auto& [f, x] : c.terms) x *= k;
  return c;
}

static std::string flag_string(const Flag& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " < ";
    s += f[i].to_string();
  }
  return s + "]";
}

std::string Chain::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [f, c] : terms) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Coeff a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += flag_string(f);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Complex

static const std::vector<Flag> kNoCells;

const std::vector<Flag>& FlagComplex::cells(std::size_t k) const {
  return k < cells_.size() ? cells_[k] : kNoCells;
}

const std::vector<Flag>& FlagComplex::relative_cells(std::size_t k) const {
  return k < relative_.size() ? relative_[k] : kNoCells;
}

bool FlagComplex::is_collapsed(const Flag& f) const {
  return f.empty() || f.front() != bottom() || f.back() != top();
}

std::optional<std::size_t> FlagComplex::index_of(std::size_t k, const Flag& f) const {
  if (k >= index_.size()) return std::nullopt;
  auto it = index_[k].find(f);
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

IntMat FlagComplex::boundary_matrix(std::size_t k) const {
  const auto& cols = relative_cells(k);
  const std::size_t rows = k == 0 ? 0 : relative_cells(k - 1).size();
  IntMat m = zeros(rows, cols.size());
  if (k == 0) return m;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i <= k; ++i) {
      Flag face = cols[j];
      face.erase(face.begin() + static_cast<long>(i));
      if (auto r = index_of(k - 1, face)) m[*r][j] += i % 2 ? -1 : 1;
    }
  return m;
}

std::vector<Int> FlagComplex::to_vector(const Chain& c) const {
  std::vector<Int> x(relative_cells(c.degree).size(), Int(0));
  for (const auto& [f, coeff] : c.terms) {
    if (f.size() != c.degree + 1) throw DegeneracyError("chain cell of the wrong degree");
    if (auto i = index_of(c.degree, f)) {
      x[*i] += Int(static_cast<long>(coeff));
      continue;
    }
    if (!is_collapsed(f) || !std::binary_search(cells(c.degree).begin(), cells(c.degree).end(), f))
      throw ContainmentError("cell " + flag_string(f) + " is not in the complex");
  }
  return x;
}

Chain FlagComplex::from_vector(std::size_t k, const std::vector<Int>& x) const {
  Chain c;
  c.degree = k;
  const auto& cs = relative_cells(k);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) {
      if (!x[i].fits_slong_p()) throw CapacityError("chain coefficient overflow");
      c.add(cs[i], x[i].get_si());
    }
  return c;
}

FlagComplex build_complex(std::vector<Space> lattice) {
  if (lattice.empty()) throw ContainmentError("empty lattice");
  std::sort(lattice.begin(), lattice.end());
  lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());
  const std::size_t dim = lattice.front().ambient_dim();
  for (const auto& s : lattice)
    if (s.ambient_dim() != dim) throw AmbientError("lattice spaces in different ambients");
  if (!lattice.front().is_zero()) throw ContainmentError("lattice is missing the zero space");
  for (const auto& s : lattice)
    if (!lattice.back().contains(s)) throw ContainmentError("lattice has no top space");

  FlagComplex cx;
  cx.lattice_ = std::move(lattice);
  const std::size_t m = cx.lattice_.size();
  std::vector<std::vector<std::size_t>> above(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (cx.lattice_[j].rank() > cx.lattice_[i].rank() && cx.lattice_[j].contains(cx.lattice_[i]))
        above[i].push_back(j);

  std::vector<std::size_t> path;
  auto visit = [&](auto&& self, std::size_t v) -> void {
    path.push_back(v);
    if (++cx.cell_count_ > kMaxCells)
      throw CapacityError("flag complex exceeds " + std::to_string(kMaxCells) + " cells");
    const std::size_t k = path.size() - 1;
    if (cx.cells_.size() <= k) cx.cells_.resize(k + 1);
    Flag f;
    for (auto p : path) f.push_back(cx.lattice_[p]);
    cx.cells_[k].push_back(std::move(f));
    for (auto w : above[v]) self(self, w);
    path.pop_back();
  };
  for (std::size_t i = 0; i < m; ++i) visit(visit, i);

  cx.relative_.resize(cx.cells_.size());
  cx.index_.resize(cx.cells_.size());
  for (std::size_t k = 0; k < cx.cells_.size(); ++k) {
    std::sort(cx.cells_[k].begin(), cx.cells_[k].end());
    for (const auto& f : cx.cells_[k])
      if (!cx.is_collapsed(f)) {
        cx.index_[k].emplace(f, cx.relative_[k].size());
        cx.relative_[k].push_back(f);
      }
  }
  return cx;
}

std::vector<Space> subset_span_lattice(std::span<const Vec> t, std::size_t ambient_dim, bool close) {
  if (t.size() > 16) throw CapacityError("too many vectors for a subset lattice");
  std::set<Space> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.size()); ++mask) {
    std::vector<Vec> s;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (mask >> i & 1) s.push_back(t[i]);
    out.insert(span(s, ambient_dim));
  }
  while (close) {
    close = false;
    std::vector<Space> cur(out.begin(), out.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        for (Space s : {intersect(cur[i], cur[j]), sum(cur[i], cur[j])})
          if (out.insert(std::move(s)).second) close = true;
    if (out.size() > 1024) throw CapacityError("lattice closure exceeds 1024 spaces");
  }
  return {out.begin(), out.end()};
}

Chain full_boundary(const Chain& c) {
  Chain out;
  out.degree = c.degree == 0 ? 0 : c.degree - 1;
  if (c.degree == 0) return out;
  for (const auto& [f, coeff] : c.terms)
    for (std::size_t i = 0; i < f.size(); ++i) {
      Flag face = f;
      face.erase(face.begin() + static_cast<long>(i));
      out.add(face, i % 2 ? -coeff : coeff);
    }
  return out;
}

Chain relative_boundary(const FlagComplex& cx, const Chain& c) {
  Chain full = full_boundary(c);
  Chain out;
  out.degree = full.degree;
  for (const auto& [f, coeff] : full.terms)
    if (!cx.is_collapsed(f)) out.add(f, coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Homology

HomologyBasis::HomologyBasis(const FlagComplex& cx, std::size_t k) : cx_(&cx), k_(k) {
  const std::size_t nk = cx.relative_cells(k).size();
  const std::size_t below = k == 0 ? 0 : cx.relative_cells(k - 1).size();
  d_k_ = smith(cx.boundary_matrix(k), below, nk);
  r1_ = d_k_.rank();

  const std::size_t above = cx.relative_cells(k + 1).size();
  IntMat next = mul(d_k_.q_inv, cx.boundary_matrix(k + 1), nk);
  IntMat m(next.begin() + static_cast<long>(r1_), next.end());
  for (auto& row : m) row.resize(above);
  m_ = smith(m, nk - r1_, above);

  group_.betti = nk - r1_ - m_.rank();
  for (const auto& d : m_.diagonal)
    if (d > 1) group_.torsion.push_back(d);
}

bool HomologyBasis::is_cycle(const Chain& c) const {
  if (c.is_zero()) return true;
  if (c.degree != k_) return false;
  return relative_boundary(*cx_, c).is_zero();
}

std::vector<Int> HomologyBasis::kernel_coords(const Chain& c) const {
  if (!c.is_zero() && c.degree != k_) throw DegeneracyError("chain degree does not match");
  Chain cc = c;
  cc.degree = k_;
  std::vector<Int> y = mul(d_k_.q_inv, cx_->to_vector(cc));
  y.erase(y.begin(), y.begin() + static_cast<long>(r1_));
  return mul(m_.p, y);
}

std::vector<Int> HomologyBasis::free_coordinates(const Chain& c) const {
  auto u = kernel_coords(c);
  return {u.begin() + static_cast<long>(m_.rank()), u.end()};
}

std::vector<Int> HomologyBasis::torsion_coordinates(const Chain& c) const {
  auto u = kernel_coords(c);
  std::vector<Int> out;
  for (std::size_t i = 0; i < m_.rank(); ++i)
    if (m_.diagonal[i] > 1) {
      Int r = u[i] % m_.diagonal[i];
      if (r < 0) r += m_.diagonal[i];
      out.push_back(r);
    }
  return out;
}

std::optional<Chain> HomologyBasis::solve_boundary(const Chain& c) const {
  if (!is_cycle(c)) return std::nullopt;
  auto u = kernel_coords(c);
  const std::size_t r2 = m_.rank();
  std::vector<Int> z(m_.cols, Int(0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i >= r2) {
      if (u[i] != 0) return std::nullopt;
      continue;
    }
    if (u[i] % m_.diagonal[i] != 0) return std::nullopt;
    z[i] = u[i] / m_.diagonal[i];
  }
  Chain w = cx_->from_vector(k_ + 1, mul(m_.q, z));
  Chain check = relative_boundary(*cx_, w);
  Chain target = c;
  target.degree = k_;
  if (check.terms != target.terms) return std::nullopt;
  return w;
}

HomologyGroup homology(const FlagComplex& cx, std::size_t k) {
  return HomologyBasis(cx, k).group();
}

// ---------------------------------------------------------------------------
// Apartments

static int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) s = -s;
  return s;
}

Chain apartment_chain(std::span<const Vec> t, std::size_t ambient_dim) {
  const std::size_t n = t.size();
  for (const auto& v : t)
    if (v.size() != ambient_dim) throw AmbientError("apartment: vector outside the ambient");
  if (n > 8) throw CapacityError("apartment of more than 8 vectors");
  Chain out;
  out.degree = n;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Flag f{Space::zero(ambient_dim)};
    std::vector<Vec> prefix;
    bool degenerate = false;
    for (auto i : perm) {
      prefix.push_back(t[i]);
      Space s = span(prefix, ambient_dim);
      if (s.rank() == f.back().rank()) {
        degenerate = true;
        break;
      }
      f.push_back(std::move(s));
    }
    if (!degenerate) out.add(f, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Chain apartment_cycle(std::span<const Vec> t, std::size_t ambient_dim) {
  if (!is_independent(t)) throw DegeneracyError("apartment: vectors are dependent");
  return apartment_chain(t, ambient_dim);
}

Chain shuffle_product(const Chain& a, const Chain& b) {
  const std::size_t m = a.degree, n = b.degree;
  Chain out;
  out.degree = m + n;
  // Each shuffle is a lattice path; bit s set means step s moves in the a-direction.
  std::vector<std::pair<std::uint64_t, int>> shuffles;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m + n)); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != m) continue;
    int inv = 0, seen_b = 0;
    for (std::size_t s = 0; s < m + n; ++s) {
      if (mask >> s & 1) inv += seen_b;
      else ++seen_b;
    }
    shuffles.emplace_back(mask, inv % 2 ? -1 : 1);
  }
  for (const auto& [fa, ca] : a.terms)
    for (const auto& [fb, cb] : b.terms)
      for (const auto& [mask, sign] : shuffles) {
        Flag f{sum(fa[0], fb[0])};
        std::size_t i = 0, j = 0;
        for (std::size_t s = 0; s < m + n; ++s) {
          (mask >> s & 1) ? ++i : ++j;
          f.push_back(sum(fa[i], fb[j]));
        }
        out.add(f, ca * cb * sign);
      }
  return out;
}

ProductReport chain_product_check(std::span<const Vec> s, std::span<const Vec> t) {
  if (s.empty() && t.empty()) throw DegeneracyError("chain_product_check: both tuples empty");
  const std::size_t dim = s.empty() ? t.front().size() : s.front().size();
  if (!are_orthogonal(span(s, dim), span(t, dim)))
    throw OrthogonalityError("chain_product_check: spans are not orthogonal");
  std::vector<Vec> joint(s.begin(), s.end());
  joint.insert(joint.end(), t.begin(), t.end());

  ProductReport rep;
  Chain lhs = shuffle_product(apartment_chain(s, dim), apartment_chain(t, dim));
  Chain rhs = apartment_chain(joint, dim);
  if (lhs.is_zero() && rhs.is_zero()) {
    rep.degenerate = true;
    return rep;
  }
  FlagComplex cx = build_complex(subset_span_lattice(joint, dim));
  HomologyBasis hb(cx, joint.size());
  rep.chains_equal = lhs == rhs;
  if (hb.is_cycle(lhs) && hb.is_cycle(rhs)) {
    rep.lhs = hb.free_coordinates(lhs);
    rep.rhs = hb.free_coordinates(rhs);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Coproduct at the homology level

bool CoproductReport::pass() const {
  if (!theta_defined) return false;
  for (const auto& c : components)
    if (!c.in_kernel || c.lhs != c.rhs || c.lhs.empty()) return false;
  return true;
}

namespace {

using CellPair = std::pair<Flag, Flag>;
using Tensor2 = std::map<CellPair, Coeff>;

void add_to(Tensor2& t, const Flag& a, const Flag& b, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

// Index i with t[i] entering between consecutive flag entries.
std::vector<std::size_t> entering_order(const Flag& f, const std::vector<Vec>& vs) {
  std::vector<std::size_t> order;
  for (std::size_t j = 1; j < f.size(); ++j)
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (!vs[i].empty() && f[j].contains(vs[i]) && !f[j - 1].contains(vs[i])) {
        order.push_back(i);
        break;
      }
  return order;
}

int order_sign(std::vector<std::size_t> order) { return permutation_sign(order); }

bool kernel_tensor(const Tensor2& t, const FlagComplex& cu, const FlagComplex& cw) {
  std::map<Flag, Chain> by_b, by_a;
  for (const auto& [key, c] : t) {
    auto& ca = by_b[key.second];
    ca.degree = key.first.size() - 1;
    ca.add(key.first, c);
    auto& cb = by_a[key.first];
    cb.degree = key.second.size() - 1;
    cb.add(key.second, c);
  }
  for (const auto& [b, ca] : by_b)
    if (!relative_boundary(cu, ca).is_zero()) return false;
  for (const auto& [a, cb] : by_a)
    if (!relative_boundary(cw, cb).is_zero()) return false;
  return true;
}

std::vector<std::vector<Int>> tensor_coordinates(const Tensor2& t, const HomologyBasis& hu,
                                                 const HomologyBasis& hw) {
  const std::size_t bu = hu.group().betti, bw = hw.group().betti;
  std::vector<std::vector<Int>> out(bu, std::vector<Int>(bw, Int(0)));
  std::map<Flag, std::vector<Int>> lu, lw;
  auto coords = [](std::map<Flag, std::vector<Int>>& cache, const HomologyBasis& h, const Flag& f) {
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    Chain c;
    c.degree = f.size() - 1;
    c.add(f, 1);
    return cache[f] = h.free_coordinates(c);
  };
  for (const auto& [key, c] : t) {
    auto a = coords(lu, hu, key.first);
    auto b = coords(lw, hw, key.second);
    for (std::size_t i = 0; i < bu; ++i)
      for (std::size_t j = 0; j < bw; ++j) out[i][j] += Int(static_cast<long>(c)) * a[i] * b[j];
  }
  return out;
}

}  // namespace

CoproductReport chain_coproduct_check(std::span<const Vec> tspan) {
  if (tspan.empty()) throw DegeneracyError("chain_coproduct_check needs at least one vector");
  if (!is_independent(tspan)) throw DegeneracyError("chain_coproduct_check: dependent vectors");
  const std::vector<Vec> t(tspan.begin(), tspan.end());
  const std::size_t n = t.size(), dim = t.front().size();
  const Space v = span(t, dim);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  CoproductReport rep;
  rep.n = n;
  std::map<std::uint64_t, Tensor2> lhs, rhs;

  auto subset_vectors = [&](std::uint64_t mask) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) out.push_back(t[i]);
    return out;
  };
  auto subset_sign = [&](std::uint64_t mask) {
    int s = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((mask >> i & 1) && !(mask >> j & 1)) s = -s;
    return s;
  };

  // Left side: cut each top cell of the apartment at the halves.
  const Chain apt = apartment_cycle(t, dim);
  const CutSystem halves = CutSystem::halves();
  for (const auto& [flag, c] : apt.terms) {
    std::vector<std::size_t> pi = entering_order(flag, t);
    for (std::size_t k = 0; k <= n; ++k) {
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < k; ++j) mask |= std::uint64_t{1} << pi[j];
      std::vector<Rat> cuts;
      for (std::size_t j = 1; j <= n; ++j)
        cuts.push_back(j <= k ? ratio(static_cast<long>(j), static_cast<long>(2 * (k + 1)))
                              : Rat(Rat(1, 2) + ratio(static_cast<long>(j - k),
                                                      static_cast<long>(2 * (n - k + 1)))));
      auto res = theta(halves, StepFn::from_cuts(v, cuts, flag));
      if (!res) {
        rep.theta_defined = false;
        continue;
      }
      Flag fa = res->factors[0].values(), fb = res->factors[1].values();

      std::vector<Vec> in_s(n), proj(n);
      Space w = complement_in(v, span(subset_vectors(mask), dim));
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1)
          in_s[i] = t[i];
        else
          proj[i] = project(w, t[i]);
      }
      int eps = order_sign(pi) * order_sign(entering_order(fa, in_s)) *
                order_sign(entering_order(fb, proj)) * subset_sign(mask);
      add_to(lhs[mask], fa, fb, c * eps);
    }
  }

  // Right side: the Pt coproduct of (t), carried through orientation signs.
  auto base = normalize(t, dim);
  const int pre = orientation_sign(t, v) * base->second;
  for (const auto& term : coproduct_terms(base->first)) {
    const Space& u = term.face.ambient();
    const Space& w = term.link.ambient();
    Mat both = u.basis();
    both.insert(both.end(), w.basis().begin(), w.basis().end());
    int eps = orientation_sign(both, v);
    int sign = pre * term.sign * eps * orientation_sign(term.face.vectors(), u) *
               orientation_sign(term.link.vectors(), w);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (u.contains(t[i])) mask |= std::uint64_t{1} << i;
    Chain a = apartment_chain(term.face.vectors(), dim);
    Chain b = apartment_chain(term.link.vectors(), dim);
    auto& dst = rhs[mask];
    for (const auto& [fa, ca] : a.terms)
      for (const auto& [fb, cb] : b.terms) add_to(dst, fa, fb, sign * ca * cb);
  }

  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    auto in_s = subset_vectors(mask);
    Space u = span(in_s, dim);
    Space w = complement_in(v, u);
    std::vector<Vec> proj;
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask >> i & 1)) proj.push_back(project(w, t[i]));
    FlagComplex cu = build_complex(subset_span_lattice(in_s, dim));
    FlagComplex cw = build_complex(subset_span_lattice(proj, dim));
    HomologyBasis hu(cu, in_s.size()), hw(cw, proj.size());

    CoproductComponent comp;
    comp.u = u;
    comp.subset = mask;
    comp.in_kernel = kernel_tensor(lhs[mask], cu, cw) && kernel_tensor(rhs[mask], cu, cw);
    comp.lhs = tensor_coordinates(lhs[mask], hu, hw);
    comp.rhs = tensor_coordinates(rhs[mask], hu, hw);
    rep.components.push_back(std::move(comp));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Boundary relation in the 3-line complex

RelationReport solomon_tits_relation(std::span<const Vec> t, bool closed) {
  if (t.empty() || t.size() != t.front().size() + 1)
    throw DegeneracyError("the relation check takes n+1 vectors in Q^n");
  const std::size_t n = t.front().size();
  RelationReport rep;
  Element rel = boundary_relation(t);
  for (const auto& term : to_ls(rel))
    rep.relation += term.coefficient * apartment_cycle(term.tuple, n);
  rep.relation.degree = n;
  FlagComplex cx = build_complex(subset_span_lattice(t, n, closed));
  rep.witness = HomologyBasis(cx, n).solve_boundary(rep.relation);
  return rep;
}

}  // namespace sah
