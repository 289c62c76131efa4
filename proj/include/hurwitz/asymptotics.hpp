#pragma once

#include <utility>
#include <vector>

#include "hurwitz/bigfloat.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// H_{g,N mu} / (N^(3g-3+l/2) e^(N|mu|) r(g,N mu)!) divided by the predicted
// limit (2 pi)^(-l/2) prod mu_i^(-1/2) P_g(mu). Computed in log space from the
// exact ELSV value; throws PrecisionLoss when fewer than 32 bits survive.
BigFloat asymptotic_ratio(int g, const Partition& mu, int N, long precision_bits = kDefaultPrecisionBits);

// The two sides of the Laplace-transform identity at y:
// first  = sum <tau_k> prod Gamma(k_i + 1/2) / (sqrt(2 pi) y_i^(k_i + 1/2)),
//          the transform of (2 pi)^(-l/2) prod x_i^(-1/2) P_g(x) term by term,
// second = K_g(s) at s_i = sqrt(2 y_i).
std::pair<BigFloat, BigFloat> laplace_check(int g, const std::vector<Rat>& y,
                                            long precision_bits = kDefaultPrecisionBits);

}  // namespace hurwitz
