#include "hurwitz/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace hurwitz {

namespace {
mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
  return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}
}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, long precision_bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& v, long precision_bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_q(v_, v.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& v, long precision_bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

#define HURWITZ_BIGFLOAT_OP(op, fn)                     \
  BigFloat& BigFloat::operator op(const BigFloat& o) {  \
    mpfr_t tmp;                                         \
    mpfr_init2(tmp, max_prec(*this, o));                \
    fn(tmp, v_, o.v_, MPFR_RNDN);                       \
    mpfr_swap(v_, tmp);                                 \
    mpfr_clear(tmp);                                    \
    return *this;                                       \
  }
HURWITZ_BIGFLOAT_OP(+=, mpfr_add)
HURWITZ_BIGFLOAT_OP(-=, mpfr_sub)
HURWITZ_BIGFLOAT_OP(*=, mpfr_mul)
HURWITZ_BIGFLOAT_OP(/=, mpfr_div)
#undef HURWITZ_BIGFLOAT_OP

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat log_factorial(const BigInt& n, long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
  mpfr_add_ui(r.v_, r.v_, 1, MPFR_RNDN);
  mpfr_lngamma(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat pi(long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent2() const {
  if (is_zero()) return 0;
  return static_cast<long>(mpfr_get_exp(v_));
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

long agreeing_bits(const BigFloat& a, const BigFloat& b) {
  const long prec = std::min(a.precision(), b.precision());
  const BigFloat diff = a - b;
  if (diff.is_zero()) return prec;
  const BigFloat& big = abs(a) < abs(b) ? b : a;
  if (big.is_zero()) return prec;
  return std::clamp(big.exponent2() - diff.exponent2(), 0L, prec);
}

}  // namespace hurwitz
