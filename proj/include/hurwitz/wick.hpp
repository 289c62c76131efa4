#pragma once

#include <string>
#include <vector>

#include "hurwitz/budget.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Polynomial in N with integer coefficients; coeffs[i] multiplies N^i.
struct Polynomial {
  std::vector<BigInt> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> c);
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt eval(const BigInt& n) const;
  std::string str() const;  // e.g. "2N^3 + N"

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs == b.coeffs; }
};

// Gaussian moment <prod tr M^{k_i}>_N of the Hermitian ensemble with
// <|M_ij|^2> = 1, as the sum over pairings of polygon sides of
// N^(vertices of the glued surface). Zero when sum k_i is odd.
Polynomial wick_moment(const std::vector<int>& ks, const Budget& budget = Budget::from_env());

}  // namespace hurwitz
