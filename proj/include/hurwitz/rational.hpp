#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hurwitz {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class so that expression
// templates never leak into user code.
class Rat {
public:
  Rat() = default;
  Rat(long v) : q_(v) {}
  Rat(int v) : q_(v) {}
  Rat(unsigned long v) : q_(v) {}
  Rat(const BigInt& v) : q_(v) {}
  Rat(const BigInt& num, const BigInt& den);
  Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  // Integer-valued GMP expressions, e.g. BigInt(a) * b.
  template <class U>
  Rat(const __gmp_expr<mpz_t, U>& e) : q_(BigInt(e)) {}

  // Parses "n" or "n/d" (decimal).
  static Rat parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  // "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);
// base^exp for a possibly negative exponent (base must be non-zero then).
Rat pow(const Rat& base, long exp);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
// (2k-1)!! with the convention (-1)!! = 1.
BigInt double_factorial_odd(long k);
BigInt ipow(const BigInt& base, unsigned long exp);

}  // namespace hurwitz
