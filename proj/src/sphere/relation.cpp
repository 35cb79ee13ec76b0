#include "sah/relation.hpp"

#include <cmath>
#include <utility>

namespace sah {

namespace {

struct GramSchmidt {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> norm2;  // |b_i*|^2
};

GramSchmidt gram_schmidt(const std::vector<std::vector<Int>>& b) {
  const std::size_t n = b.size(), m = n ? b[0].size() : 0;
  GramSchmidt gs;
  gs.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  gs.norm2.assign(n, Rat(0));
  std::vector<std::vector<Rat>> star(n, std::vector<Rat>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) star[i][k] = Rat(b[i][k]);
    for (std::size_t j = 0; j < i; ++j) {
      if (gs.norm2[j] == 0) continue;
      Rat num = 0;
      for (std::size_t k = 0; k < m; ++k) num += Rat(b[i][k]) * star[j][k];
      gs.mu[i][j] = num / gs.norm2[j];
      for (std::size_t k = 0; k < m; ++k) star[i][k] -= gs.mu[i][j] * star[j][k];
    }
    for (std::size_t k = 0; k < m; ++k) gs.norm2[i] += star[i][k] * star[i][k];
  }
  return gs;
}

Int nearest(const Rat& q) {
  // floor(q + 1/2)
  Rat t = q + Rat(1, 2);
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return out;
}

double log2_of(const Rat& q) {
  if (q <= 0) return -HUGE_VAL;
  long en = 0, ed = 0;
  double dn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double dd = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(dn / dd) + static_cast<double>(en - ed);
}

}  // namespace

std::vector<Rat> lll_reduce(std::vector<std::vector<Int>>& b) {
  const std::size_t n = b.size();
  if (n == 0) return {};
  const Rat delta(3, 4);
  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Int r = nearest(gs.mu[k][j]);
      if (r == 0) continue;
      for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[j][c];
      for (std::size_t c = 0; c < j; ++c) gs.mu[k][c] -= Rat(r) * gs.mu[j][c];
      gs.mu[k][j] -= Rat(r);
    }
    if (gs.norm2[k] >= (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return gs.norm2;
}

RelationSearch find_relation(const std::vector<BigFloat>& xs, const Int& height, long bits) {
  const std::size_t n = xs.size();
  if (bits < 128) throw PrecisionError("relation search needs at least 128 bits");
  if (n == 0) throw DegeneracyError("relation search on an empty list");
  if (height < 1) throw DegeneracyError("relation height must be positive");
  for (const auto& x : xs)
    if (x.precision() < bits) throw PrecisionError("input carries fewer bits than the search");

  RelationSearch out;
  out.count = n;
  out.bits = bits;
  out.height = height;
  out.scale_bits = bits / 2;

  // The reduced basis only exposes relations shorter than about
  // 2^(s/n - (n-1)/2); refuse heights past that.
  const double log_h = log2_of(Rat(height));
  const double dn = static_cast<double>(n);
  const double reach = static_cast<double>(out.scale_bits) / dn - (dn - 1) / 2;
  if (n > 1 && reach < log_h + std::log2(dn) + 2)
    throw PrecisionError("precision too low for relations of this height");

  std::vector<std::vector<Int>> lattice(n, std::vector<Int>(n + 1, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    lattice[i][i] = 1;
    lattice[i][n] = xs[i].scaled_round(out.scale_bits);
  }
  std::vector<Rat> norm2 = lll_reduce(lattice);

  Rat min_norm2 = norm2.front();
  for (const auto& v : norm2)
    if (v < min_norm2) min_norm2 = v;
  out.norm_bound_log2 = log2_of(min_norm2) / 2;
  // |v|^2 <= n H^2 + (1 + n H / 2)^2 for the lattice vector of a relation.
  Rat h(height);
  Rat tail = 1 + Rat(static_cast<long>(n)) * h / 2;
  Rat relation_norm2 = Rat(static_cast<long>(n)) * h * h + tail * tail;
  out.relation_norm_log2 = log2_of(relation_norm2) / 2;

  const BigFloat tol = ldexp(BigFloat(1, bits), -out.scale_bits);
  for (const auto& row : lattice) {
    std::vector<Int> c(row.begin(), row.begin() + static_cast<long>(n));
    Int g = 0;
    bool small = true;
    for (const auto& ci : c) {
      g = gcd(g, ci);
      if (abs(ci) > height) small = false;
    }
    if (g == 0 || !small) continue;
    for (auto& ci : c) ci /= g;
    for (const auto& ci : c)
      if (ci != 0) {
        if (ci < 0)
          for (auto& cj : c) cj = -cj;
        break;
      }
    BigFloat sum(bits);
    for (std::size_t i = 0; i < n; ++i) sum = sum + BigFloat(Rat(c[i]), bits) * xs[i];
    if (abs(sum) < tol) {
      out.residual_log2 = sum.exponent2();
      out.relation = std::move(c);
      return out;
    }
  }
  out.certified_none = min_norm2 > relation_norm2;
  return out;
}

}  // namespace sah
