#include "sah/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

namespace sah {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(x_, bits);
  mpfr_set_zero(x_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t bits) {
  mpfr_init2(x_, bits);
  mpfr_set_si(x_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& q, mpfr_prec_t bits) {
  mpfr_init2(x_, bits);
  mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(x_, o.precision());
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(x_, o.precision());
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(x_, o.x_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t bits) {
  BigFloat r(bits);
  if (text.empty() || mpfr_set_str(r.x_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("not a decimal number: '" + text + "'");
  return r;
}

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint(a, b));
  mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw GeometryError("division by zero");
  BigFloat r(joint(a, b));
  mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent2() const {
  if (mpfr_zero_p(x_)) return -(1L << 40);
  return mpfr_get_exp(x_) - 1;
}

Int BigFloat::scaled_round(long shift) const {
  BigFloat t(precision() + std::max(shift, 0L) + 8);
  mpfr_mul_2si(t.x_, x_, shift, MPFR_RNDN);
  mpfr_round(t.x_, t.x_);
  Int out;
  mpfr_get_z(out.get_mpz_t(), t.x_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  // %.*Rf keeps fixed notation for the small magnitudes used here.
  int len = mpfr_snprintf(nullptr, 0, "%.*Rf", digits, x_);
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Rf", digits, x_);
  out.pop_back();
  if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') out.erase(0, 1);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw GeometryError("square root of a negative number");
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat acos(const BigFloat& x) {
  BigFloat one(1, x.precision());
  BigFloat c = x > one ? one : (x < -one ? -one : x);
  BigFloat r(x.precision());
  mpfr_acos(r.get(), c.get(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace sah
