#pragma once

#include <iosfwd>
#include <string>

#include <mpfr.h>

#include "hurwitz/rational.hpp"

namespace hurwitz {

inline constexpr long kDefaultPrecisionBits = 256;

// Arbitrary-precision binary float (MPFR, round-to-nearest). Each primitive
// operation is correctly rounded at the result precision, which is the max
// of the operand precisions.
class BigFloat {
public:
  explicit BigFloat(long precision_bits = kDefaultPrecisionBits);
  BigFloat(double v, long precision_bits = kDefaultPrecisionBits);
  BigFloat(const Rat& v, long precision_bits = kDefaultPrecisionBits);
  BigFloat(const BigInt& v, long precision_bits = kDefaultPrecisionBits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string str(int digits = 20) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend BigFloat exp(const BigFloat& x);
  friend BigFloat log(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat pow(const BigFloat& x, const BigFloat& y);
  friend BigFloat abs(const BigFloat& x);
  // log(n!) via lngamma(n+1).
  friend BigFloat log_factorial(const BigInt& n, long precision_bits);
  friend BigFloat pi(long precision_bits);

  // Exponent e with 2^(e-1) <= |x| < 2^e; zero for x == 0.
  long exponent2() const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

private:
  mpfr_t v_;
};

BigFloat log_factorial(const BigInt& n, long precision_bits);
BigFloat pi(long precision_bits);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

// Number of leading bits on which a and b agree (relative), capped at the
// working precision; returns the precision when they are equal.
long agreeing_bits(const BigFloat& a, const BigFloat& b);

}  // namespace hurwitz
