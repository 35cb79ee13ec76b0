#include "sah/spherical.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sah {

BigFloat tolerance(long bits, long slack) { return ldexp(BigFloat(1, bits), -(bits - slack)); }

// ---------------------------------------------------------------------------
// Angles

std::optional<Rat> rational_cos_of_pi_multiple(const Rat& q) {
  Rat half = q / 2;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  Rat r = q - 2 * Rat(fl);  // in [0, 2)
  static const std::pair<Rat, Rat> table[] = {
      {Rat(0), Rat(1)},     {Rat(1, 3), Rat(1, 2)}, {Rat(1, 2), Rat(0)},   {Rat(2, 3), Rat(-1, 2)},
      {Rat(1), Rat(-1)},    {Rat(4, 3), Rat(-1, 2)}, {Rat(3, 2), Rat(0)}, {Rat(5, 3), Rat(1, 2)}};
  for (const auto& [k, c] : table)
    if (k == r) return c;
  return std::nullopt;
}

std::optional<Rat> pi_multiple_of_arccos(const Rat& c) {
  static const std::pair<Rat, Rat> table[] = {{Rat(1), Rat(0)},      {Rat(1, 2), Rat(1, 3)},
                                              {Rat(0), Rat(1, 2)},   {Rat(-1, 2), Rat(2, 3)},
                                              {Rat(-1), Rat(1)}};
  for (const auto& [k, q] : table)
    if (k == c) return q;
  return std::nullopt;
}

Angle Angle::numeric(BigFloat v) { return Angle{std::move(v), std::nullopt, std::nullopt}; }

Angle Angle::pi_multiple(const Rat& q, long bits) {
  return Angle{BigFloat::pi(bits) * BigFloat(q, bits), q, rational_cos_of_pi_multiple(q)};
}

Angle Angle::arccos(const Rat& c, long bits) {
  if (c < -1 || c > 1) throw GeometryError("arccos argument outside [-1, 1]");
  return Angle{acos(BigFloat(c, bits)), pi_multiple_of_arccos(c), c};
}

BigFloat Angle::cosine() const { return exact_cos ? BigFloat(*exact_cos, bits()) : cos(value); }

std::string Angle::to_string(int digits) const {
  if (!pi_rational) return value.to_string(digits);
  const Rat& q = *pi_rational;
  if (q == 0) return "0";
  std::string num = q.get_num() == 1 ? "pi" : q.get_num() == -1 ? "-pi" : q.get_num().get_str() + "*pi";
  return q.get_den() == 1 ? num : num + "/" + q.get_den().get_str();
}

namespace {

Angle combine(const Angle& a, const Angle& b, int sign) {
  Angle out = Angle::numeric(sign > 0 ? a.value + b.value : a.value - b.value);
  if (a.pi_rational && b.pi_rational) {
    Rat q = sign > 0 ? Rat(*a.pi_rational + *b.pi_rational) : Rat(*a.pi_rational - *b.pi_rational);
    out.pi_rational = q;
    out.exact_cos = rational_cos_of_pi_multiple(q);
  }
  return out;
}

}  // namespace

Angle operator+(const Angle& a, const Angle& b) { return combine(a, b, 1); }
Angle operator-(const Angle& a, const Angle& b) { return combine(a, b, -1); }

// ---------------------------------------------------------------------------
// Angle expressions

namespace {

struct Node {
  BigFloat value;
  std::optional<Rat> rat;       // exact rational number
  std::optional<Rat> pi;        // exact multiple of pi
  std::optional<Rat> cos_of;    // arccos of this rational
};

class AngleParser {
 public:
  AngleParser(const std::string& text, long bits) : s_(text), bits_(bits) {}

  Node parse() {
    Node n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("angle expression '" + s_ + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    pos_ += w.size();
    return true;
  }

  Node from_rat(const Rat& q) { return Node{BigFloat(q, bits_), q, q == 0 ? std::optional<Rat>(Rat(0)) : std::nullopt, std::nullopt}; }
  Node from_pi(const Rat& q) {
    return Node{BigFloat::pi(bits_) * BigFloat(q, bits_), q == 0 ? std::optional<Rat>(Rat(0)) : std::nullopt, q,
                std::nullopt};
  }
  static Node numeric(BigFloat v) { return Node{std::move(v), std::nullopt, std::nullopt, std::nullopt}; }

  Node expr() {
    Node left = term();
    for (;;) {
      if (eat('+'))
        left = add(left, term(), 1);
      else if (eat('-'))
        left = add(left, term(), -1);
      else
        return left;
    }
  }

  Node term() {
    Node left = unary();
    for (;;) {
      if (eat('*'))
        left = mul(left, unary());
      else if (eat('/'))
        left = div(left, unary());
      else
        return left;
    }
  }

  Node unary() {
    if (eat('-')) {
      Node n = unary();
      Node out = numeric(-n.value);
      if (n.rat) out.rat = Rat(-*n.rat);
      if (n.pi) out.pi = Rat(-*n.pi);
      return out;
    }
    if (eat('+')) return unary();
    return primary();
  }

  Node primary() {
    skip();
    if (eat('(')) {
      Node n = expr();
      if (!eat(')')) fail("missing ')'");
      return n;
    }
    if (eat_word("pi") || eat_word("π")) return from_pi(Rat(1));
    if (eat_word("arccos") || eat_word("acos")) {
      if (!eat('(')) fail("arccos needs parentheses");
      Node arg = expr();
      if (!eat(')')) fail("missing ')'");
      if (arg.rat) {
        Angle a = Angle::arccos(*arg.rat, bits_);
        return Node{a.value, std::nullopt, a.pi_rational, arg.rat};
      }
      BigFloat one(1, bits_);
      if (arg.value > one || arg.value < -one) throw GeometryError("arccos argument outside [-1, 1]");
      return numeric(acos(arg.value));
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
      return from_rat(number());
    fail(pos_ < s_.size() ? "unexpected '" + s_.substr(pos_, 1) + "'" : "unexpected end");
  }

  Rat number() {
    std::string digits;
    long frac = 0;
    bool dot = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++frac;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) fail("malformed number");
    long exp10 = 0;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string e = s_.substr(start, pos_ - start);
      if (e.empty() || e == "+" || e == "-") fail("malformed exponent");
      exp10 = std::stol(e);
      if (exp10 > 1000 || exp10 < -1000) fail("exponent out of range");
    }
    Rat q(Int(digits, 10));
    long shift = exp10 - frac;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    q = shift < 0 ? Rat(q / Rat(p)) : Rat(q * Rat(p));
    q.canonicalize();
    return q;
  }

  Node add(const Node& a, const Node& b, int sign) {
    Node out = numeric(sign > 0 ? a.value + b.value : a.value - b.value);
    if (a.rat && b.rat) out.rat = sign > 0 ? Rat(*a.rat + *b.rat) : Rat(*a.rat - *b.rat);
    if (a.pi && b.pi) out.pi = sign > 0 ? Rat(*a.pi + *b.pi) : Rat(*a.pi - *b.pi);
    return out;
  }

  Node mul(const Node& a, const Node& b) {
    Node out = numeric(a.value * b.value);
    if (a.rat && b.rat) out.rat = Rat(*a.rat * *b.rat);
    if (a.rat && b.pi) out.pi = Rat(*a.rat * *b.pi);
    if (a.pi && b.rat) out.pi = Rat(*a.pi * *b.rat);
    return out;
  }

  Node div(const Node& a, const Node& b) {
    if (b.value.is_zero()) fail("division by zero");
    Node out = numeric(a.value / b.value);
    if (a.rat && b.rat) out.rat = Rat(*a.rat / *b.rat);
    if (a.pi && b.rat) out.pi = Rat(*a.pi / *b.rat);
    if (a.pi && b.pi && *b.pi != 0) out.rat = Rat(*a.pi / *b.pi);
    return out;
  }

  std::string s_;
  long bits_;
  std::size_t pos_ = 0;
};

}  // namespace

Angle parse_angle(const std::string& text, long bits) {
  Node n = AngleParser(text, bits).parse();
  Angle a = n.pi       ? Angle::pi_multiple(*n.pi, bits)
            : n.cos_of ? Angle::arccos(*n.cos_of, bits)
                       : Angle::numeric(n.value);
  BigFloat tol = tolerance(bits);
  if (a.value < -tol || a.value > BigFloat::pi(bits) + tol)
    throw GeometryError("angle '" + text + "' is outside [0, pi]");
  return a;
}

// ---------------------------------------------------------------------------
// Regular tetrahedra

namespace {

using BVec = std::vector<BigFloat>;

BigFloat dot(const BVec& a, const BVec& b) {
  BigFloat s(a.front().precision());
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

BVec axpy(const BigFloat& k, const BVec& x, const BVec& y) {  // y - k x
  BVec out = y;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] - k * x[i];
  return out;
}

// cos a, after checking 0 < a < arccos(-1/3), i.e. -1/3 < cos a < 1.
BigFloat side_cosine(const Angle& a, long bits) {
  if (a.value.precision() < bits) throw PrecisionError("side length carries fewer bits than requested");
  if (a.exact_cos) {
    const Rat& c = *a.exact_cos;
    if (!(c > Rat(-1, 3) && c < 1))
      throw GeometryError("side length outside (0, arccos(-1/3)): Gram matrix not positive definite");
    return BigFloat(c, bits);
  }
  BigFloat c = cos(a.value);
  BigFloat tol = tolerance(bits);
  if (!(a.value > tol) || !(BigFloat(1, bits) + BigFloat(3, bits) * c > tol) ||
      !(a.value < BigFloat::pi(bits)))
    throw GeometryError("side length outside (0, arccos(-1/3)): Gram matrix not positive definite");
  return c;
}

bool close(const BigFloat& a, const BigFloat& b, long bits) { return abs(a - b) < tolerance(bits, 16); }

}  // namespace

SphericalSimplex regular_tetra(const Angle& a, long bits) {
  BigFloat c = side_cosine(a, bits);
  BigFloat one(1, bits);
  BigFloat s1 = sqrt(one - c);
  BigFloat s2 = sqrt(one + BigFloat(3, bits) * c);
  BigFloat off = (s2 - s1) / BigFloat(4, bits);
  SphericalSimplex s;
  s.bits = bits;
  s.side = a;
  for (std::size_t i = 0; i < 4; ++i) {
    BVec v(4, off);
    v[i] = s1 + off;
    s.vertices.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) s.edges.emplace_back(i, j);
  return s;
}

Angle edge_length(const SphericalSimplex& s, std::pair<std::size_t, std::size_t> e) {
  const BVec& a = s.vertices.at(e.first);
  const BVec& b = s.vertices.at(e.second);
  Angle out = Angle::numeric(acos(dot(a, b) / sqrt(dot(a, a) * dot(b, b))));
  if (s.side && close(out.value, s.side->value, s.bits)) return *s.side;
  return out;
}

Angle dihedral(const SphericalSimplex& s, std::pair<std::size_t, std::size_t> e) {
  if (s.vertices.size() != 4) throw GeometryError("dihedral angles need a 4-vertex simplex");
  const auto [i, j] = e;
  if (i == j || i >= 4 || j >= 4) throw GeometryError("not an edge");
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < 4; ++k)
    if (k != i && k != j) rest.push_back(k);

  const BigFloat tol = tolerance(s.bits);
  const BVec& vi = s.vertices[i];
  BigFloat ni = sqrt(dot(vi, vi));
  BVec u1 = vi;
  for (auto& x : u1) x = x / ni;
  BVec w = axpy(dot(s.vertices[j], u1), u1, s.vertices[j]);
  BigFloat nw = sqrt(dot(w, w));
  if (!(nw > tol)) throw GeometryError("degenerate edge");
  BVec u2 = w;
  for (auto& x : u2) x = x / nw;

  std::vector<BVec> p;
  for (auto k : rest) {
    BVec q = axpy(dot(s.vertices[k], u1), u1, s.vertices[k]);
    q = axpy(dot(q, u2), u2, q);
    if (!(sqrt(dot(q, q)) > tol)) throw GeometryError("degenerate projection");
    p.push_back(std::move(q));
  }
  Angle d = Angle::numeric(acos(dot(p[0], p[1]) / sqrt(dot(p[0], p[0]) * dot(p[1], p[1]))));

  if (s.side && s.side->exact_cos) {
    Angle f = tetra_dihedral_formula(*s.side, s.bits);
    if (close(d.value, f.value, s.bits)) {
      if (f.pi_rational) return f;
      d.exact_cos = f.exact_cos;
    }
  }
  return d;
}

Angle tetra_dihedral_formula(const Angle& a, long bits) {
  BigFloat c = side_cosine(a, bits);
  if (a.exact_cos) {
    const Rat& ec = *a.exact_cos;
    return Angle::arccos(Rat(ec / (1 + 2 * ec)), bits);
  }
  BigFloat one(1, bits);
  return Angle::numeric(acos(c / (one + BigFloat(2, bits) * c)));
}

// ---------------------------------------------------------------------------
// Dehn tensors

std::string DehnTensor::to_string(int digits) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    long long c = terms[i].coefficient;
    if (i == 0) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long m = c < 0 ? -c : c;
    if (m != 1) os << m;
    os << "(" << terms[i].left.to_string(digits) << " ⊗ " << terms[i].right.to_string(digits) << ")";
  }
  return os.str();
}

DehnTensor swap(const DehnTensor& t) {
  DehnTensor out;
  for (const auto& term : t.terms) out.terms.push_back({term.coefficient, term.right, term.left});
  return out;
}

DehnTensor dehn_invariant(const SphericalSimplex& s) {
  if (s.vertices.size() != 4) throw GeometryError("the Dehn invariant needs a 3-simplex");
  DehnTensor out;
  for (const auto& e : s.edges) {
    Angle l = edge_length(s, e), d = dihedral(s, e);
    bool merged = false;
    for (auto& term : out.terms)
      if (close(term.left.value, l.value, s.bits) && close(term.right.value, d.value, s.bits)) {
        ++term.coefficient;
        merged = true;
        break;
      }
    if (!merged) out.terms.push_back({1, l, d});
  }
  return out;
}

namespace {

// Distinct factors of a tensor sorted by value, and each term's indices.
struct FactorTable {
  std::vector<Angle> factors;
  std::vector<std::pair<std::size_t, std::size_t>> term_index;
};

FactorTable factor_table(const DehnTensor& t, long bits) {
  FactorTable ft;
  std::vector<const Angle*> all;
  for (const auto& term : t.terms) {
    all.push_back(&term.left);
    all.push_back(&term.right);
  }
  std::stable_sort(all.begin(), all.end(), [](const Angle* a, const Angle* b) { return a->value < b->value; });
  for (const Angle* a : all)
    if (ft.factors.empty() || !close(ft.factors.back().value, a->value, bits)) ft.factors.push_back(*a);
  auto find = [&](const Angle& a) {
    for (std::size_t i = 0; i < ft.factors.size(); ++i)
      if (close(ft.factors[i].value, a.value, bits)) return i;
    return ft.factors.size();
  };
  for (const auto& term : t.terms) ft.term_index.emplace_back(find(term.left), find(term.right));
  return ft;
}

bool is_pi_rational(const Angle& x, const Int& height, long bits) {
  if (x.pi_rational) return true;
  auto r = find_relation({x.value, BigFloat::pi(bits)}, height, bits);
  return r.relation && (*r.relation)[0] != 0;
}

bool same_mod_pi_q(const Angle& x, const Angle& y, const Int& height, long bits) {
  auto r = find_relation({x.value, y.value, BigFloat::pi(bits)}, height, bits);
  return r.relation && (*r.relation)[0] != 0 && (*r.relation)[0] == -(*r.relation)[1];
}

}  // namespace

DehnTensor reduce_tensor(const DehnTensor& t, const Int& height, long bits) {
  FactorTable ft = factor_table(t, bits);
  const std::size_t k = ft.factors.size();
  std::vector<bool> rational(k);
  for (std::size_t i = 0; i < k; ++i) rational[i] = is_pi_rational(ft.factors[i], height, bits);
  std::vector<std::size_t> rep(k, k), reps;
  for (std::size_t i = 0; i < k; ++i) {
    if (rational[i]) continue;
    for (auto r : reps)
      if (same_mod_pi_q(ft.factors[r], ft.factors[i], height, bits)) {
        rep[i] = r;
        break;
      }
    if (rep[i] == k) {
      rep[i] = i;
      reps.push_back(i);
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, long long> acc;
  for (std::size_t n = 0; n < t.terms.size(); ++n) {
    auto [l, r] = ft.term_index[n];
    if (rational[l] || rational[r]) continue;
    acc[{rep[l], rep[r]}] += t.terms[n].coefficient;
  }
  DehnTensor out;
  for (const auto& [key, c] : acc)
    if (c != 0) out.terms.push_back({c, ft.factors[key.first], ft.factors[key.second]});
  return out;
}

CocommReport cocomm_test(const DehnTensor& t, const Int& height, long bits) {
  CocommReport rep;
  rep.height = height;
  rep.bits = bits;
  rep.reduced = reduce_tensor(t, height, bits);
  rep.certified = true;

  FactorTable ft = factor_table(rep.reduced, bits);
  std::vector<BigFloat> pool{BigFloat::pi(bits)};
  std::vector<std::vector<Rat>> coords;  // per factor, over the basis found so far
  for (const auto& x : ft.factors) {
    std::vector<BigFloat> xs = pool;
    xs.push_back(x.value);
    RelationSearch s = find_relation(xs, height, bits);
    rep.searches.push_back(s);
    if (s.relation) {
      const auto& c = *s.relation;
      if (c.back() == 0) throw PrecisionError("relation among accepted basis elements; raise the precision");
      std::vector<Rat> v;
      for (std::size_t b = 1; b + 1 < c.size(); ++b) v.push_back(-Rat(c[b]) / Rat(c.back()));
      coords.push_back(std::move(v));
    } else {
      if (!s.certified_none) rep.certified = false;
      pool.push_back(x.value);
      rep.basis.push_back(x);
      std::vector<Rat> v(rep.basis.size(), Rat(0));
      v.back() = 1;
      coords.push_back(std::move(v));
    }
  }
  const std::size_t k = rep.basis.size();
  for (auto& v : coords) v.resize(k, Rat(0));
  rep.matrix.assign(k, std::vector<Rat>(k, Rat(0)));
  for (std::size_t n = 0; n < rep.reduced.terms.size(); ++n) {
    auto [l, r] = ft.term_index[n];
    Rat c(static_cast<long>(rep.reduced.terms[n].coefficient));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) rep.matrix[i][j] += c * coords[l][i] * coords[r][j];
  }
  rep.swapped.assign(k, std::vector<Rat>(k, Rat(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) rep.swapped[i][j] = rep.matrix[j][i];
  rep.equal = rep.matrix == rep.swapped;
  return rep;
}

}  // namespace sah
