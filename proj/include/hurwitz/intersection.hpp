#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hurwitz/bigfloat.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// <tau_{k1} ... tau_{kn} lambda_k>_g with the tau indices kept sorted
// descending.
struct Correlator {
  int genus = 0;
  std::vector<int> taus;
  int lambda = 0;

  Correlator() = default;
  Correlator(int g, std::vector<int> taus, int lambda = 0);

  int points() const { return static_cast<int>(taus.size()); }
  // Sum k_i + lambda == 3g - 3 + n.
  bool dimension_ok() const;
  bool stable() const { return 2 * genus - 2 + points() > 0; }
  std::string str() const;

  friend bool operator==(const Correlator&, const Correlator&) = default;
  friend auto operator<=>(const Correlator&, const Correlator&) = default;
};

// Genus determined by the dimension condition, or -1 if none fits.
int genus_from_dimension(const std::vector<int>& taus, int lambda = 0);

// Pure psi intersection numbers from the string, dilaton and KdV equations.
// Zero outside the stable range or when the dimension condition fails.
Rat psi_correlator(int g, std::vector<int> taus);
// Same, with the genus read off the dimension condition.
Rat psi_correlator(std::vector<int> taus);
std::size_t psi_memo_size();

// (n-3)!/(k1! ... kn!) for sum k_i = n - 3, zero otherwise.
Rat genus0_closed(const std::vector<int>& taus);

// All ordered n-vectors of nonnegative integers with the given sum.
std::vector<std::vector<int>> compositions(int total, int parts);
// All weakly decreasing n-vectors of nonnegative integers with the given sum.
std::vector<std::vector<int>> sorted_index_vectors(int total, int parts);

// P_g(x) = sum <tau_k1 ... tau_kl>_g prod x_i^{k_i}. Throws UnstableRange.
Rat n_point_eval(int g, const std::vector<Rat>& x);

// K_g(s) = sum <tau_k1 ... tau_kn>_g prod (2k_i - 1)!! / s_i^(2k_i + 1).
Rat kontsevich_series_eval(int g, const std::vector<Rat>& s);
BigFloat kontsevich_series_eval(int g, const std::vector<BigFloat>& s);

}  // namespace hurwitz
