#pragma once

#include <map>
#include <utility>

#include "hurwitz/budget.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Power series in q and the p_i, Laurent in lambda, truncated at q-degree
// dmax and lambda exponent lmax. The monomial lambda^L q^d p_mu is keyed by
// (L, mu) with d = |mu|; the empty partition is the q^0 term.
class TruncatedSeries {
public:
  using Key = std::pair<int, Partition>;

  TruncatedSeries() = default;
  TruncatedSeries(int dmax, int lmax) : dmax_(dmax), lmax_(lmax) {}

  int dmax() const { return dmax_; }
  int lmax() const { return lmax_; }
  const std::map<Key, Rat>& terms() const { return terms_; }

  Rat coeff(int lambda, const Partition& mu) const;
  // Adds c to a coefficient; terms outside the truncation are dropped.
  void add(int lambda, const Partition& mu, const Rat& c);
  void set(int lambda, const Partition& mu, const Rat& c);

  // Smallest lambda exponent with a nonzero coefficient (lmax + 1 if zero).
  int lambda_order() const;
  bool has_constant_term() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rat& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.terms_ == b.terms_; }

private:
  int dmax_ = 0, lmax_ = -2;
  std::map<Key, Rat> terms_;  // nonzero entries only
};

// exp and log for series with no q^0 part (every term has degree >= 1) and
// lambda order >= 0; exact up to the truncation. log(S) is log(1 + S).
// Throw std::domain_error otherwise.
TruncatedSeries series_exp(const TruncatedSeries& s);
TruncatedSeries series_log1p(const TruncatedSeries& s);

// Coefficient of lambda^(2g-2) q^d p_mu is H_{g,mu} / r!, r = 2g-2+d+l(mu),
// for all mu with |mu| <= dmax and 2g-2 <= lmax (from the degeneration
// recursion). Throws BudgetExceeded past the budget caps.
TruncatedSeries build_H(int dmax, int lmax, const Budget& budget = Budget::from_env());

// Restriction p_1 = 1, p_i = 0 (i >= 2): keeps only mu = (1^d).
TruncatedSeries restrict_to_p1(const TruncatedSeries& h);

struct TodaResidual {
  Rat max_abs;                // over the comparison window
  int window_degree = 0;      // d <= window_degree
  int window_lambda = 0;      // lambda exponent <= window_lambda
  long checked = 0;           // monomials compared
  long discarded_nonzero = 0; // nonzero residual entries outside the window
};

// exp(H(y0+lambda) + H(y0-lambda) - 2H) - lambda^2 e^(-y0) d^2H/dp_1 dy0,
// compared on d <= dmax - 1 and lambda exponent <= lmax + 2.
TodaResidual toda_residual(const TruncatedSeries& h);
// exp(Delta Ht) - lambda^2 e^(-y0) d^2Ht/dy0^2 for Ht = restrict_to_p1(h).
TodaResidual htilde_residual(const TruncatedSeries& h);

}  // namespace hurwitz
