#include "hurwitz/wick.hpp"

#include <numeric>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Polynomial::Polynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigInt Polynomial::eval(const BigInt& n) const {
  BigInt v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * n + *it;
  return v;
}

std::string Polynomial::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (c != 1 || i == 0) os << c.get_str();
    if (i >= 1) os << "N";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

namespace {

// Sides of polygon i are consecutive darts; gamma rotates each polygon.
void pair_sides(std::vector<int>& alpha, const std::vector<int>& gamma, std::vector<BigInt>& counts) {
  const int n = static_cast<int>(alpha.size());
  int d = 0;
  while (d < n && alpha[static_cast<std::size_t>(d)] >= 0) ++d;
  if (d == n) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++cycles;
      for (int x = s; !seen[static_cast<std::size_t>(x)];
           x = gamma[static_cast<std::size_t>(alpha[static_cast<std::size_t>(x)])])
        seen[static_cast<std::size_t>(x)] = true;
    }
    if (static_cast<std::size_t>(cycles) >= counts.size()) counts.resize(static_cast<std::size_t>(cycles) + 1, 0);
    ++counts[static_cast<std::size_t>(cycles)];
    return;
  }
  for (int e = d + 1; e < n; ++e) {
    if (alpha[static_cast<std::size_t>(e)] >= 0) continue;
    alpha[static_cast<std::size_t>(d)] = e;
    alpha[static_cast<std::size_t>(e)] = d;
    pair_sides(alpha, gamma, counts);
    alpha[static_cast<std::size_t>(d)] = alpha[static_cast<std::size_t>(e)] = -1;
  }
}

}  // namespace

Polynomial wick_moment(const std::vector<int>& ks, const Budget& budget) {
  int total = 0;
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("polygon sizes must be positive");
    total += k;
  }
  if (total > budget.wick_max_sides)
    throw BudgetExceeded("Wick gluing: " + std::to_string(total) + " sides exceeds cap " +
                         std::to_string(budget.wick_max_sides));
  if (total % 2) return Polynomial{};
  std::vector<int> gamma(static_cast<std::size_t>(total));
  int start = 0;
  for (int k : ks) {
    for (int j = 0; j < k; ++j) gamma[static_cast<std::size_t>(start + j)] = start + (j + 1) % k;
    start += k;
  }
  std::vector<int> alpha(static_cast<std::size_t>(total), -1);
  std::vector<BigInt> counts;
  pair_sides(alpha, gamma, counts);
  return Polynomial(counts);
}

}  // namespace hurwitz
