#include <doctest.h>

#include "gen.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_count.hpp"
#include "hurwitz/toda.hpp"

using namespace hurwitz;

namespace {

// Random series with every term of q-degree >= 1 and lambda exponent >= 0.
TruncatedSeries random_nilpotent(Gen& gen, int dmax, int lmax, int terms) {
  TruncatedSeries s(dmax, lmax);
  for (int i = 0; i < terms; ++i) {
    Partition mu = gen.partition(dmax);
    s.add(gen.integer(0, lmax), mu, gen.rational(9, 7));
  }
  return s;
}

TruncatedSeries one(int dmax, int lmax) {
  TruncatedSeries s(dmax, lmax);
  s.set(0, Partition{}, Rat(1));
  return s;
}

}  // namespace

TEST_CASE("generating function coefficients") {
  const TruncatedSeries h = build_H(3, 0);
  CHECK(h.coeff(-2, Partition{1}) == Rat(1));
  CHECK(h.coeff(-2, Partition{2}) == Rat(1, 2));
  CHECK(h.coeff(0, Partition{2, 1}) == Rat(40, 120));
  CHECK(h.coeff(2, Partition{2, 1}) == Rat(0));
  const TruncatedSeries ht = restrict_to_p1(build_H(2, 0));
  CHECK(ht.coeff(0, Partition{1, 1}) == Rat(1, 48));
  CHECK(ht.coeff(0, Partition{2}) == Rat(0));
}

TEST_CASE("coefficients are Hurwitz numbers over r!") {
  const TruncatedSeries h = build_H(4, 2);
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : partitions_of(d))
      for (int g = 0; 2 * g - 2 <= 2; ++g) {
        const int r = ram_count(g, mu);
        if (r > 9) continue;
        CHECK(h.coeff(2 * g - 2, mu) == hurwitz_monodromy(g, mu) / Rat(factorial(static_cast<unsigned long>(r))));
      }
}

TEST_CASE("Toda residual vanishes") {
  for (const auto& [dmax, lmax] : std::vector<std::pair<int, int>>{{4, 2}, {2, 0}, {1, 0}, {3, 2}, {5, 0}}) {
    const TruncatedSeries h = build_H(dmax, lmax);
    const TodaResidual r = toda_residual(h);
    CAPTURE(dmax);
    CAPTURE(lmax);
    CHECK(r.max_abs == Rat(0));
    CHECK(r.window_degree == dmax - 1);
    CHECK(r.window_lambda == lmax + 2);
    if (dmax > 1) CHECK(r.checked > 0);
    const TodaResidual t = htilde_residual(h);
    CHECK(t.max_abs == Rat(0));
  }
}

TEST_CASE("a corrupted coefficient is detected") {
  TruncatedSeries h = build_H(4, 2);
  h.add(0, Partition{2, 1}, Rat(1, 120));
  CHECK(toda_residual(h).max_abs > Rat(0));
  TruncatedSeries k = build_H(4, 2);
  k.add(0, Partition{1, 1}, Rat(1, 24));
  CHECK(htilde_residual(k).max_abs > Rat(0));
}

TEST_CASE("exp and log are inverse") {
  Gen gen(61);
  for (int trial = 0; trial < 30; ++trial) {
    const TruncatedSeries s = random_nilpotent(gen, 4, 3, 6);
    const TruncatedSeries e = series_exp(s);
    CHECK(e.coeff(0, Partition{}) == Rat(1));
    CHECK(series_log1p(e - one(4, 3)) == s);
  }
}

TEST_CASE("exp turns sums into products") {
  Gen gen(62);
  for (int trial = 0; trial < 30; ++trial) {
    const TruncatedSeries a = random_nilpotent(gen, 4, 2, 4), b = random_nilpotent(gen, 4, 2, 4);
    CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
  }
}

TEST_CASE("series arithmetic and truncation") {
  TruncatedSeries a(2, 1);
  a.add(0, Partition{1}, Rat(2));
  a.add(1, Partition{1}, Rat(3));
  a.add(2, Partition{1}, Rat(5));
  a.add(0, Partition{3}, Rat(7));
  CHECK(a.terms().size() == 2);
  const TruncatedSeries sq = a * a;
  CHECK(sq.coeff(0, Partition{1, 1}) == Rat(4));
  CHECK(sq.coeff(1, Partition{1, 1}) == Rat(12));
  CHECK(sq.terms().size() == 2);
  CHECK(a.lambda_order() == 0);
  CHECK_FALSE(a.has_constant_term());
  TruncatedSeries z = a - a;
  CHECK(z.terms().empty());
  CHECK(z.lambda_order() == 2);
  a *= Rat(1, 2);
  CHECK(a.coeff(1, Partition{1}) == Rat(3, 2));
  CHECK_THROWS_AS(series_exp(one(2, 1)), std::domain_error);
  TruncatedSeries neg(2, 1);
  neg.add(-2, Partition{1}, Rat(1));
  CHECK_THROWS_AS(series_exp(neg), std::domain_error);
  CHECK_THROWS_AS(series_log1p(neg), std::domain_error);
}

TEST_CASE("building respects the budget") {
  CHECK_THROWS_AS(build_H(7, 0), BudgetExceeded);
  CHECK_THROWS_AS(build_H(2, 8), BudgetExceeded);
  CHECK_THROWS_AS(build_H(0, 0), std::invalid_argument);
}
