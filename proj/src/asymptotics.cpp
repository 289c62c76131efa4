#include "hurwitz/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

#include "hurwitz/errors.hpp"
#include "hurwitz/hodge.hpp"
#include "hurwitz/intersection.hpp"

namespace hurwitz {

BigFloat asymptotic_ratio(int g, const Partition& mu, int N, long prec) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (!mu.distinct_parts()) throw std::invalid_argument("asymptotic ratio needs distinct parts");
  const int l = mu.length();
  if (2 * g - 2 + l <= 0) throw UnstableRange("asymptotic ratio needs 2g-2+l > 0");

  std::vector<int> scaled;
  for (int m : mu.parts()) scaled.push_back(N * m);
  const Partition nmu(scaled);
  const HodgeTable& table = (g == 0 && l <= 2) ? HodgeTable{} : inverted_hodge_table(g, l);
  const Rat h = elsv_evaluate(g, nmu, table);

  std::vector<Rat> x;
  for (int m : mu.parts()) x.emplace_back(m);
  const Rat p = n_point_eval(g, x);
  if (h.sign() <= 0 || p.sign() <= 0) throw std::domain_error("asymptotic ratio needs positive H and P_g");

  const BigFloat two_pi = BigFloat(2L, prec) * pi(prec);
  std::vector<BigFloat> terms;
  terms.push_back(log(BigFloat(h, prec)));
  terms.push_back(-(BigFloat(Rat(6 * g - 6 + l, 2), prec) * log(BigFloat(Rat(N), prec))));
  terms.push_back(-BigFloat(Rat(BigInt(N) * mu.size()), prec));
  terms.push_back(-log_factorial(BigInt(ram_count(g, nmu)), prec));
  terms.push_back(BigFloat(Rat(l, 2), prec) * log(two_pi));
  for (int m : mu.parts()) terms.push_back(BigFloat(Rat(1, 2), prec) * log(BigFloat(Rat(m), prec)));
  terms.push_back(-log(BigFloat(p, prec)));

  BigFloat sum(prec);
  long largest = 0;
  for (const auto& t : terms) {
    sum += t;
    largest = std::max(largest, t.exponent2());
  }
  if (prec - largest < 32)
    throw PrecisionLoss("asymptotic ratio: only " + std::to_string(prec - largest) + " bits survive");
  return exp(sum);
}

std::pair<BigFloat, BigFloat> laplace_check(int g, const std::vector<Rat>& y, long prec) {
  const int l = static_cast<int>(y.size());
  if (g < 0 || 2 * g - 2 + l <= 0) throw UnstableRange("Laplace check needs 2g-2+l > 0");
  for (const auto& v : y)
    if (v.sign() <= 0) throw std::domain_error("Laplace check needs positive y");

  const BigFloat root_two_pi = sqrt(BigFloat(2L, prec) * pi(prec));
  BigFloat transform(prec);
  for (const auto& k : compositions(3 * g - 3 + l, l)) {
    const Rat c = psi_correlator(g, k);
    if (c.is_zero()) continue;
    BigFloat term(c, prec);
    for (int i = 0; i < l; ++i) {
      const BigFloat a(Rat(2 * k[static_cast<std::size_t>(i)] + 1, 2), prec);
      BigFloat gamma_a(prec);
      mpfr_gamma(gamma_a.get(), a.get(), MPFR_RNDN);
      term *= gamma_a / (root_two_pi * pow(BigFloat(y[static_cast<std::size_t>(i)], prec), a));
    }
    transform += term;
  }

  std::vector<BigFloat> s;
  for (const auto& v : y) s.push_back(sqrt(BigFloat(Rat(2) * v, prec)));
  return {transform, kontsevich_series_eval(g, s)};
}

}  // namespace hurwitz
