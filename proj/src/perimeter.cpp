#include "hurwitz/perimeter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hurwitz/bigfloat.hpp"
#include "hurwitz/edge_tree.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

double perimeter_weight(long n) {
  if (n < 2) return 0;
  constexpr long prec = 128;
  const BigFloat nn(static_cast<double>(n), prec);
  BigFloat lw = log(BigFloat(static_cast<double>(n - 1), prec));
  lw += BigFloat(static_cast<double>(n - 2), prec) * log(nn);
  lw -= nn;
  lw -= log_factorial(BigInt(n - 1), prec);
  return exp(lw).to_double();
}

namespace {

struct Term {
  double mean = 0;
  double variance = 0;  // of the mean
};

Term inner_expectation(long n, double y1, double y2, long N, long samples, std::uint64_t seed) {
  double s = 0, s2 = 0;
  for (long i = 0; i < samples; ++i) {
    // One generator per (n, i).
    auto rng = sample_rng(seed ^ (static_cast<std::uint64_t>(n) << 32), static_cast<std::uint64_t>(i));
    const auto t = sample_edge_tree(static_cast<int>(n), rng);
    const auto sp = semiperimeters(t);
    const double v = std::exp(-(y1 * sp.root.to_double() + y2 * sp.top.to_double()) / static_cast<double>(N));
    s += v;
    s2 += v * v;
  }
  const double m = static_cast<double>(samples);
  Term t;
  t.mean = s / m;
  t.variance = samples > 1 ? std::max(0.0, (s2 - s * s / m) / (m - 1)) / m : 0.0;
  return t;
}

void check(double y1, double y2, long N, long samples_per_n) {
  if (!(y1 > 0) || !(y2 > 0)) throw std::invalid_argument("perimeter Laplace transform needs y1, y2 > 0");
  if (N < 1000) throw InsufficientSamples("perimeter Laplace estimate needs N >= 1000");
  if (samples_per_n < 1) throw InsufficientSamples("perimeter Laplace estimate needs samples_per_n >= 1");
}

LaplaceEstimate finish(double y1, double y2, long N, long samples_per_n, std::uint64_t seed,
                       const std::vector<double>& weights, const std::vector<Term>& terms) {
  double est = 0, var = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    est += weights[i] * terms[i].mean;
    var += weights[i] * weights[i] * terms[i].variance;
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  LaplaceEstimate r;
  r.y1 = y1;
  r.y2 = y2;
  r.N = N;
  r.samples_per_n = samples_per_n;
  r.seed = seed;
  r.estimate = est * scale;
  r.standard_error = std::sqrt(var) * scale;
  r.closed_form = std::sqrt(2.0) / (std::sqrt(y1) + std::sqrt(y2));
  r.relative_error = (r.estimate - r.closed_form) / r.closed_form;
  return r;
}

std::vector<double> weights_upto(long last) {
  std::vector<double> w;
  for (long n = 2; n <= last; ++n) w.push_back(perimeter_weight(n));
  return w;
}

}  // namespace

LaplaceEstimate perimeter_laplace(double y1, double y2, long N, long samples_per_n, std::uint64_t seed) {
  check(y1, y2, N, samples_per_n);
  const long last = 8 * N;
  const auto w = weights_upto(last);
  std::vector<Term> terms(w.size());
  // Largest n first so the dynamic schedule balances.
#pragma omp parallel for schedule(dynamic, 1)
  for (long n = last; n >= 2; --n)
    terms[static_cast<std::size_t>(n - 2)] = inner_expectation(n, y1, y2, N, samples_per_n, seed);
  return finish(y1, y2, N, samples_per_n, seed, w, terms);
}

LaplaceEstimate perimeter_laplace_serial(double y1, double y2, long N, long samples_per_n, std::uint64_t seed) {
  check(y1, y2, N, samples_per_n);
  const long last = 8 * N;
  const auto w = weights_upto(last);
  std::vector<Term> terms(w.size());
  for (long n = 2; n <= last; ++n)
    terms[static_cast<std::size_t>(n - 2)] = inner_expectation(n, y1, y2, N, samples_per_n, seed);
  return finish(y1, y2, N, samples_per_n, seed, w, terms);
}

double perimeter_laplace_deterministic(double y1, double y2, long N) {
  double s = 0;
  for (long n = 2; n <= 8 * N; ++n)
    s += perimeter_weight(n) * std::exp(-(y1 + y2) * static_cast<double>(n) / (2.0 * static_cast<double>(N)));
  return s / std::sqrt(static_cast<double>(N));
}

}  // namespace hurwitz
