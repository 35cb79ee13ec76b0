#include "sah/polytope.hpp"

#include <algorithm>
#include <sstream>

namespace sah {

// ---------------------------------------------------------------------------
// Generator

Generator Generator::empty(std::size_t ambient_dim) {
  Generator g;
  g.ambient_ = Space::zero(ambient_dim);
  return g;
}

std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
  if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
  if (auto c = a.vectors_.size() <=> b.vectors_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.vectors_.size(); ++i)
    if (auto c = lex_compare(a.vectors_[i], b.vectors_[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Generator::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (i) s += ',';
    s += sah::to_string(vectors_[i]);
  }
  return s + "]";
}

std::optional<std::pair<Generator, int>> normalize(std::span<const Vec> vectors,
                                                   std::size_t ambient_dim) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw AmbientError("normalize: vector " + to_string(v) + " not in Q^" +
                         std::to_string(ambient_dim));
  if (!is_independent(vectors)) return std::nullopt;
  int sign = 1;
  Generator g;
  g.vectors_.reserve(vectors.size());
  for (const auto& v : vectors) {
    Vec p = primitive(v);
    if (leading_sign(p) < 0) {
      p = neg(p);
      sign = -sign;
    }
    g.vectors_.push_back(std::move(p));
  }
  std::sort(g.vectors_.begin(), g.vectors_.end(),
            [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
  g.ambient_ = span(g.vectors_, ambient_dim);
  return std::make_pair(std::move(g), sign);
}

Generator subset_generator(const Generator& g, std::uint64_t mask) {
  Generator s;
  for (std::size_t i = 0; i < g.vectors_.size(); ++i)
    if (mask >> i & 1) s.vectors_.push_back(g.vectors_[i]);
  s.ambient_ = span(s.vectors_, g.ambient_dim());
  return s;
}

// ---------------------------------------------------------------------------
// Element

Element Element::of(const Generator& g, Coeff c) {
  Element e(g.ambient());
  e.add_term(g, c);
  return e;
}

Element Element::from_tuple(std::span<const Vec> vectors, std::size_t ambient_dim) {
  Element e(span(vectors, ambient_dim));
  if (auto n = normalize(vectors, ambient_dim)) e.add_term(n->first, n->second);
  return e;
}

Coeff Element::coefficient(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? 0 : it->second;
}

void Element::add_term(const Generator& g, Coeff c) {
  if (c == 0) return;
  if (g.ambient() != grading_)
    throw AmbientError("generator " + g.to_string() + " is not graded by " + grading_.to_string());
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  if (other.grading_ != grading_) throw AmbientError("adding elements of different gradings");
  for (const auto& [g, c] : other.terms_) add_term(g, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  if (other.grading_ != grading_) throw AmbientError("subtracting elements of different gradings");
  for (const auto& [g, c] : other.terms_) add_term(g, -c);
  return *this;
}

Element operator*(Coeff k, Element a) {
  if (k == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [g, c] : a.terms_) c *= k;
  return a;
}

static std::string signed_terms(const std::vector<std::pair<std::string, Coeff>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [body, c] : terms) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Coeff a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << body;
    first = false;
  }
  return os.str();
}

std::string Element::to_string() const {
  std::vector<std::pair<std::string, Coeff>> parts;
  for (const auto& [g, c] : terms_) parts.emplace_back(g.to_string(), c);
  return signed_terms(parts);
}

// ---------------------------------------------------------------------------
// Tensor

void Tensor::add_term(Key key, Coeff c) {
  if (c == 0) return;
  if (key.size() != arity_) throw AmbientError("tensor key of wrong arity");
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string Tensor::to_string() const {
  std::vector<std::pair<std::string, Coeff>> parts;
  for (const auto& [key, c] : terms_) {
    std::string body;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) body += "(x)";
      body += key[i].size() == 0 ? "()" : key[i].to_string();
    }
    parts.emplace_back(body, c);
  }
  return signed_terms(parts);
}

// ---------------------------------------------------------------------------
// Hopf operations

static std::pair<Generator, int> join(const Generator& a, const Generator& b) {
  std::vector<Vec> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  auto n = normalize(all, a.ambient_dim());
  if (!n) throw OrthogonalityError("join of generators with dependent vectors");
  return *n;
}

Element mu(const Element& x, const Element& y) {
  if (!are_orthogonal(x.grading(), y.grading()))
    throw OrthogonalityError("mu: gradings " + x.grading().to_string() + " and " +
                             y.grading().to_string() + " are not orthogonal");
  Element out(sum(x.grading(), y.grading()));
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      auto [g, s] = join(a, b);
      out.add_term(g, ca * cb * s);
    }
  return out;
}

std::vector<CoproductTerm> coproduct_terms(const Generator& g) {
  const std::size_t n = g.size();
  const Space& v = g.ambient();
  std::vector<CoproductTerm> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Generator face = subset_generator(g, mask);
    Space w = complement_in(v, face.ambient());
    std::vector<Vec> projected;
    for (std::size_t j = 0; j < n; ++j)
      if (!(mask >> j & 1)) projected.push_back(project(w, g.vectors()[j]));
    auto link = normalize(projected, g.ambient_dim());
    if (!link) throw DegeneracyError("coproduct: projected complement became dependent");
    out.push_back({mask, std::move(face), std::move(link->first), link->second});
  }
  return out;
}

Tensor delta(const Element& x) {
  Tensor out(x.grading(), 2);
  for (const auto& [g, c] : x.terms())
    for (auto& term : coproduct_terms(g)) out.add_term({term.face, term.link}, c * term.sign);
  return out;
}

std::pair<Generator, int> antipode_generator(const Generator& g) {
  auto n = normalize(dual_tuple(g.vectors()), g.ambient_dim());
  if (!n) throw DegeneracyError("antipode: dual tuple is dependent");
  return *n;
}

Element antipode(const Element& x) {
  Element out(x.grading());
  for (const auto& [g, c] : x.terms()) {
    auto [d, s] = antipode_generator(g);
    out.add_term(d, c * s);
  }
  return out;
}

Coeff counit(const Element& x) {
  if (!x.grading().is_zero()) return 0;
  return x.coefficient(Generator::empty(x.grading().ambient_dim()));
}

Element unit(Coeff k, std::size_t ambient_dim) {
  return Element::of(Generator::empty(ambient_dim), k);
}

Tensor apply_delta_at(const Tensor& t, std::size_t pos) {
  if (pos >= t.arity()) throw AmbientError("apply_delta_at: position out of range");
  Tensor out(t.grading(), t.arity() + 1);
  for (const auto& [key, c] : t.terms())
    for (auto& term : coproduct_terms(key[pos])) {
      Tensor::Key k;
      k.reserve(key.size() + 1);
      k.insert(k.end(), key.begin(), key.begin() + static_cast<long>(pos));
      k.push_back(term.face);
      k.push_back(term.link);
      k.insert(k.end(), key.begin() + static_cast<long>(pos) + 1, key.end());
      out.add_term(std::move(k), c * term.sign);
    }
  return out;
}

Tensor apply_counit_at(const Tensor& t, std::size_t pos) {
  if (pos >= t.arity() || t.arity() == 0)
    throw AmbientError("apply_counit_at: position out of range");
  Tensor out(t.grading(), t.arity() - 1);
  for (const auto& [key, c] : t.terms()) {
    if (key[pos].size() != 0) continue;
    Tensor::Key k = key;
    k.erase(k.begin() + static_cast<long>(pos));
    out.add_term(std::move(k), c);
  }
  return out;
}

Tensor as_tensor(const Element& x) {
  Tensor out(x.grading(), 1);
  for (const auto& [g, c] : x.terms()) out.add_term({g}, c);
  return out;
}

Tensor delta_of_factors(const Element& x, const Element& y) {
  if (!are_orthogonal(x.grading(), y.grading()))
    throw OrthogonalityError("bialgebra check needs orthogonal gradings");
  Tensor dx = delta(x), dy = delta(y);
  Tensor out(sum(x.grading(), y.grading()), 2);
  for (const auto& [kx, cx] : dx.terms())
    for (const auto& [ky, cy] : dy.terms()) {
      auto [left, sl] = join(kx[0], ky[0]);
      auto [right, sr] = join(kx[1], ky[1]);
      out.add_term({std::move(left), std::move(right)}, cx * cy * sl * sr);
    }
  return out;
}

bool bialg_check(const Generator& x, const Generator& y) {
  Element ex = Element::of(x), ey = Element::of(y);
  return delta(mu(ex, ey)) == delta_of_factors(ex, ey);
}

bool coassociativity_check(const Element& x) {
  Tensor d = delta(x);
  return apply_delta_at(d, 0) == apply_delta_at(d, 1);
}

bool counit_check(const Element& x) {
  Tensor d = delta(x), id = as_tensor(x);
  return apply_counit_at(d, 0) == id && apply_counit_at(d, 1) == id;
}

// ---------------------------------------------------------------------------
// Lee-Szczarba view

std::vector<OrderedTerm> to_ls(const Element& x) {
  std::vector<OrderedTerm> out;
  out.reserve(x.terms().size());
  for (const auto& [g, c] : x.terms())
    out.push_back({c * orientation_sign(g.vectors(), x.grading()), g.vectors()});
  return out;
}

Element from_ls(std::span<const OrderedTerm> terms, const Space& grading) {
  Element out(grading);
  for (const auto& term : terms) {
    if (!is_independent(term.tuple) || term.tuple.size() != grading.rank()) continue;
    int o = orientation_sign(term.tuple, grading);
    auto n = normalize(term.tuple, grading.ambient_dim());
    out.add_term(n->first, term.coefficient * o * n->second);
  }
  return out;
}

Element boundary_relation(std::span<const Vec> t) {
  if (t.size() < 2) throw DegeneracyError("boundary_relation needs n+1 >= 2 vectors");
  const std::size_t dim = t.front().size();
  Space v = span(t, dim);
  if (v.rank() + 1 != t.size())
    throw DegeneracyError("boundary_relation: vectors must span a space of dimension " +
                          std::to_string(t.size() - 1));
  std::vector<OrderedTerm> terms;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Vec> face;
    for (std::size_t k = 0; k < t.size(); ++k)
      if (k != i) face.push_back(t[k]);
    if (!is_independent(face))
      throw DegeneracyError("boundary_relation: face " + std::to_string(i + 1) + " is degenerate");
    // (-1)^i with faces numbered from 1.
    terms.push_back({(i + 1) % 2 == 0 ? 1 : -1, std::move(face)});
  }
  return from_ls(terms, v);
}

}  // namespace sah
