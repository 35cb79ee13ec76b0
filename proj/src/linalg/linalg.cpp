#include "sah/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace sah {

// ---------------------------------------------------------------------------
// Rationals and vectors

Rat ratio(long num, long den) {
  if (den == 0) throw DegeneracyError("zero denominator");
  Rat q(num, den < 0 ? -den : den);
  if (den < 0) q = -q;
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());

  // Decimal literal such as -0.125
  if (auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
    bool negative = !s.empty() && s.front() == '-';
    std::string digits = negative ? s.substr(1) : s;
    dot_pos = digits.find('.');
    std::string whole = digits.substr(0, dot_pos);
    std::string frac = digits.substr(dot_pos + 1);
    if ((whole + frac).empty() ||
        !std::all_of(whole.begin(), whole.end(), ::isdigit) ||
        !std::all_of(frac.begin(), frac.end(), ::isdigit))
      throw ParseError("malformed decimal literal '" + text + "'");
    mpz_class num(whole + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rat q(num, den);
    q.canonicalize();
    return negative ? Rat(-q) : q;
  }

  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && part.front() == '-') ? 1 : 0;
    return part.size() > start &&
           std::all_of(part.begin() + static_cast<long>(start), part.end(), ::isdigit);
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("malformed rational literal '" + text + "'");
    return Rat(mpz_class(s, 10));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw ParseError("malformed rational literal '" + text + "'");
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rat q(mpz_class(num, 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

static void require_same_length(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw AmbientError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
}

Rat dot(const Vec& a, const Vec& b) {
  require_same_length(a, b);
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  require_same_length(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require_same_length(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vec neg(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

Vec primitive(const Vec& v) {
  if (is_zero(v)) return v;
  mpz_class l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

std::strong_ordering lex_compare(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

int leading_sign(const Vec& v) {
  for (const auto& q : v)
    if (q != 0) return sgn(q);
  return 0;
}

// ---------------------------------------------------------------------------
// Matrices

std::vector<std::size_t> rref(Mat& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank_of(std::span<const Vec> vectors) {
  if (vectors.empty()) return 0;
  Mat m(vectors.begin(), vectors.end());
  return rref(m, m.front().size()).size();
}

bool is_independent(std::span<const Vec> vectors) {
  return rank_of(vectors) == vectors.size();
}

Rat determinant(Mat m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

Mat inverse(const Mat& m) {
  const std::size_t n = m.size();
  Mat aug(n, Vec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, n);
  if (piv.size() != n || (n > 0 && piv.back() != n - 1))
    throw DegeneracyError("matrix is singular");
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Mat transpose(const Mat& m, std::size_t cols) {
  Mat t(cols, Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

// ---------------------------------------------------------------------------
// Space

Space Space::zero(std::size_t ambient_dim) {
  Space s;
  s.ambient_ = ambient_dim;
  return s;
}

Space Space::full(std::size_t ambient_dim) {
  Space s;
  s.ambient_ = ambient_dim;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(unit_vec(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

bool Space::contains(const Vec& v) const {
  if (v.size() != ambient_)
    throw AmbientError("vector of length " + std::to_string(v.size()) +
                       " in ambient of dimension " + std::to_string(ambient_));
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k) r[k] -= f * rows_[i][k];
  }
  return sah::is_zero(r);
}

bool Space::contains(const Space& other) const {
  if (other.ambient_ != ambient_) throw AmbientError("subspaces of different ambients");
  if (other.rank() > rank()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

Vec Space::coordinates(const Vec& v) const {
  if (!contains(v)) throw ContainmentError("vector " + sah::to_string(v) + " not in subspace");
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool operator==(const Space& a, const Space& b) {
  return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
}

std::strong_ordering operator<=>(const Space& a, const Space& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    if (auto c = lex_compare(a.rows_[i], b.rows_[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Space::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ';';
    s += sah::to_string(rows_[i]);
  }
  return s + ">";
}

Space span(std::span<const Vec> vectors, std::size_t ambient_dim) {
  Space s;
  s.ambient_ = ambient_dim;
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw AmbientError("vector " + to_string(v) + " not in ambient of dimension " +
                         std::to_string(ambient_dim));
  s.rows_.assign(vectors.begin(), vectors.end());
  s.pivots_ = rref(s.rows_, ambient_dim);
  return s;
}

Space sum(const Space& a, const Space& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientError("sum of different ambients");
  Mat rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return span(rows, a.ambient_dim());
}

// Null space of the rows of an RREF matrix.
static Mat null_space(Mat rows, std::size_t cols) {
  auto piv = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  Mat out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

Space orthogonal_complement(const Space& u) {
  return span(null_space(u.basis(), u.ambient_dim()), u.ambient_dim());
}

Space intersect(const Space& a, const Space& b) {
  return orthogonal_complement(sum(orthogonal_complement(a), orthogonal_complement(b)));
}

bool are_orthogonal(const Space& a, const Space& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientError("spaces of different ambients");
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (dot(x, y) != 0) return false;
  return true;
}

Space complement_in(const Space& v, const Space& u) {
  if (!v.contains(u))
    throw ContainmentError("complement_in: " + u.to_string() + " is not inside " + v.to_string());
  const auto& vb = v.basis();
  if (u.is_zero()) return v;
  Mat a(u.rank(), Vec(vb.size()));
  for (std::size_t j = 0; j < u.rank(); ++j)
    for (std::size_t i = 0; i < vb.size(); ++i) a[j][i] = dot(vb[i], u.basis()[j]);
  Mat ys = null_space(std::move(a), vb.size());
  Mat out;
  for (const auto& y : ys) {
    Vec w = zero_vec(v.ambient_dim());
    for (std::size_t i = 0; i < vb.size(); ++i)
      if (y[i] != 0) w = add(w, scale(y[i], vb[i]));
    out.push_back(std::move(w));
  }
  return span(out, v.ambient_dim());
}

Vec project(const Space& u, const Vec& x) {
  if (x.size() != u.ambient_dim()) throw AmbientError("project: ambient mismatch");
  if (u.is_zero()) return zero_vec(x.size());
  const auto& b = u.basis();
  const std::size_t r = b.size();
  Mat gram(r, Vec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(b[i], b[j]);
  Vec rhs(r);
  for (std::size_t i = 0; i < r; ++i) rhs[i] = dot(b[i], x);
  Vec c = mat_vec(inverse(gram), rhs);
  Vec p = zero_vec(x.size());
  for (std::size_t i = 0; i < r; ++i) p = add(p, scale(c[i], b[i]));
  return p;
}

static Mat gram_of(std::span<const Vec> t) {
  const std::size_t n = t.size();
  Mat g(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = dot(t[i], t[j]);
  return g;
}

Vec solve_in_basis(std::span<const Vec> t, const Vec& x) {
  if (!is_independent(t)) throw DegeneracyError("solve_in_basis: dependent basis");
  if (t.empty()) {
    if (!is_zero(x)) throw AmbientError("nonzero vector outside the zero space");
    return {};
  }
  Vec rhs(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) rhs[i] = dot(t[i], x);
  Vec c = mat_vec(inverse(gram_of(t)), rhs);
  Vec back = zero_vec(x.size());
  for (std::size_t i = 0; i < t.size(); ++i) back = add(back, scale(c[i], t[i]));
  if (back != x) throw AmbientError("vector " + to_string(x) + " is outside the span");
  return c;
}

std::vector<Vec> dual_tuple(std::span<const Vec> t) {
  if (!is_independent(t)) throw DegeneracyError("dual_tuple: dependent tuple");
  if (t.empty()) return {};
  // Rows of G^{-1} t form the biorthogonal basis; negate for v_i^dual . v_i < 0.
  Mat ginv = inverse(gram_of(t));
  std::vector<Vec> out;
  out.reserve(t.size());
  const std::size_t n = t.front().size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Vec w = zero_vec(n);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (ginv[i][j] != 0) w = sub(w, scale(ginv[i][j], t[j]));
    out.push_back(primitive(w));
  }
  return out;
}

bool factorization_check(std::span<const Vec> t, std::uint64_t subset) {
  if (!is_independent(t)) throw DegeneracyError("factorization_check: dependent tuple");
  if (t.empty()) return true;
  const std::size_t n = t.size(), dim = t.front().size();
  Space v = span(t, dim);
  std::vector<Vec> in_s;
  for (std::size_t i = 0; i < n; ++i)
    if (subset >> i & 1) in_s.push_back(t[i]);
  Space b = complement_in(v, span(in_s, dim));

  for (std::size_t j = 0; j < n; ++j) {
    if (subset >> j & 1) continue;
    std::vector<Vec> others, projected;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      others.push_back(t[k]);
      if (!(subset >> k & 1)) projected.push_back(project(b, t[k]));
    }
    Space line = complement_in(v, span(others, dim));
    Space two_step = complement_in(v, span(projected, dim));
    for (std::size_t e = 0; e < dim; ++e) {
      Vec x = unit_vec(dim, e);
      if (project(line, x) != project(two_step, project(b, x))) return false;
    }
  }
  return true;
}

int orientation_sign(std::span<const Vec> t, const Space& v) {
  if (t.size() != v.rank())
    throw DegeneracyError("orientation_sign: " + std::to_string(t.size()) +
                          " vectors for a space of rank " + std::to_string(v.rank()));
  Mat coords;
  coords.reserve(t.size());
  for (const auto& x : t) {
    if (!v.contains(x)) throw DegeneracyError("orientation_sign: vector outside the space");
    coords.push_back(v.coordinates(x));
  }
  int s = sgn(determinant(std::move(coords)));
  if (s == 0) throw DegeneracyError("orientation_sign: tuple is not a basis");
  return s;
}

}  // namespace sah
