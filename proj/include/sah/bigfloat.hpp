#pragma once

// Thin value wrapper over an MPFR float. Every value carries its own
// precision; binary operations round to the larger of the two.

#include <mpfr.h>

#include <string>

#include "sah/linalg.hpp"
#include "sah/smith.hpp"

namespace sah {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 256);
  BigFloat(long v, mpfr_prec_t bits);
  BigFloat(const Rat& q, mpfr_prec_t bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t bits);
  // Decimal literal such as "-1.25e-3".
  static BigFloat parse(const std::string& text, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
  mpfr_srcptr get() const { return x_; }
  mpfr_ptr get() { return x_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.x_, b.x_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.x_, b.x_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.x_, b.x_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.x_, b.x_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.x_, b.x_); }

  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // floor(log2 |x|); very negative for zero.
  long exponent2() const;
  // Nearest integer to x * 2^shift.
  Int scaled_round(long shift) const;
  std::string to_string(int digits = 30) const;

 private:
  mpfr_t x_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat acos(const BigFloat& x);  // argument clamped to [-1, 1]
BigFloat ldexp(const BigFloat& x, long e);  // x * 2^e
BigFloat max(const BigFloat& a, const BigFloat& b);

}  // namespace sah
