#pragma once

#include <cstdint>

namespace hurwitz {

struct LaplaceEstimate {
  double y1 = 0, y2 = 0;
  long N = 0;
  long samples_per_n = 0;
  std::uint64_t seed = 0;
  double estimate = 0;
  double standard_error = 0;
  double closed_form = 0;  // sqrt(2) / (sqrt(y1) + sqrt(y2))
  double relative_error = 0;
};

// w_n = |E11(n)| / (e^n (n-1)!) = (n-1) n^(n-2) / (e^n (n-1)!), evaluated in
// log space at extended precision.
double perimeter_weight(long n);

// (1/sqrt N) sum_{n=2}^{8N} w_n E[exp(-(y1 P_R + y2 P_T)/N)], the inner
// expectation estimated from samples_per_n uniform edge trees per n.
// Throws InsufficientSamples for N < 1000 or samples_per_n < 1.
LaplaceEstimate perimeter_laplace(double y1, double y2, long N, long samples_per_n, std::uint64_t seed);
LaplaceEstimate perimeter_laplace_serial(double y1, double y2, long N, long samples_per_n, std::uint64_t seed);

// Same sum with the inner expectation replaced by exp(-(y1 + y2) n / (2N)),
// i.e. P_R = P_T = n/2: isolates the truncation and discretization error of
// the outer sum from the Monte Carlo part.
double perimeter_laplace_deterministic(double y1, double y2, long N);

}  // namespace hurwitz
