#include "hurwitz/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hurwitz {

Rat::Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(text), 10));
    return Rat(BigInt(std::string(text.substr(0, slash)), 10),
               BigInt(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, long exp) {
  if (exp < 0) return Rat(1) / pow(base, -exp);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
  return Rat(n, d);
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt double_factorial_odd(long k) {
  if (k <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * k - 1));
  return r;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace hurwitz
