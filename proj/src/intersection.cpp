#include "hurwitz/intersection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Correlator::Correlator(int g, std::vector<int> t, int l) : genus(g), taus(std::move(t)), lambda(l) {
  std::sort(taus.begin(), taus.end(), std::greater<>());
}

bool Correlator::dimension_ok() const {
  const int sum = std::accumulate(taus.begin(), taus.end(), 0);
  return sum + lambda == 3 * genus - 3 + points();
}

std::string Correlator::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < taus.size(); ++i) os << (i ? " " : "") << "tau" << taus[i];
  if (lambda > 0) os << (taus.empty() ? "" : " ") << "lambda" << lambda;
  os << ">_" << genus;
  return os.str();
}

int genus_from_dimension(const std::vector<int>& taus, int lambda) {
  const int sum = std::accumulate(taus.begin(), taus.end(), 0) + lambda;
  const int three_g = sum + 3 - static_cast<int>(taus.size());
  if (three_g < 0 || three_g % 3 != 0) return -1;
  return three_g / 3;
}

namespace {

class PsiMemo {
public:
  std::optional<Rat> find(const std::vector<int>& key) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::vector<int>& key, const Rat& v) {
    std::unique_lock lock(mutex_);
    memo_.emplace(key, v);
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<std::vector<int>, Rat> memo_;
};

PsiMemo& psi_memo() {
  static PsiMemo memo;
  return memo;
}

Rat psi_sorted(std::vector<int> taus);

Rat psi_any(std::vector<int> taus) {
  for (int k : taus)
    if (k < 0) return Rat(0);
  std::sort(taus.begin(), taus.end(), std::greater<>());
  return psi_sorted(std::move(taus));
}

std::vector<int> with(std::vector<int> v, std::initializer_list<int> extra) {
  v.insert(v.end(), extra.begin(), extra.end());
  return v;
}

// <tau_{n-2} X> + 2 sum_j <tau_{n-1} X_j-> + sum_{j,j'} <tau_n X_{j-,j'-}>,
// the string equation applied twice to <tau_n tau_0^2 X>, minus its first
// term.
Rat string_twice_rest(int n, const std::vector<int>& x) {
  Rat total(0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<int> y = x;
    --y[j];
    total += Rat(2) * psi_any(with(y, {n - 1}));
    for (std::size_t jj = 0; jj < y.size(); ++jj) {
      std::vector<int> z = y;
      --z[jj];
      total += psi_any(with(z, {n}));
    }
  }
  return total;
}

// Right side of the KdV equation differentiated along X:
// sum over A + B = X of <tau_{n-1} tau_0 A><tau_0^3 B> + 2 <tau_{n-1} tau_0^2 A><tau_0^2 B>,
// plus 1/4 <tau_{n-1} tau_0^4 X>. The A = X term of the first sum is left
// out: by the string equation it contains <tau_{n-2} X> itself.
Rat kdv_rhs(int n, const std::vector<int>& x) {
  Rat total(0);
  const std::size_t m = x.size();
  const unsigned long full = (1UL << m) - 1;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<int> a, b;
    for (std::size_t j = 0; j < m; ++j) ((mask >> j) & 1 ? a : b).push_back(x[j]);
    const Rat b3 = mask == full ? Rat(0) : psi_any(with(b, {0, 0, 0}));
    if (!b3.is_zero()) total += psi_any(with(a, {n - 1, 0})) * b3;
    const Rat b2 = psi_any(with(b, {0, 0}));
    if (!b2.is_zero()) total += Rat(2) * psi_any(with(a, {n - 1, 0, 0})) * b2;
  }
  total += Rat(1, 4) * psi_any(with(x, {n - 1, 0, 0, 0, 0}));
  return total;
}

Rat psi_compute(const std::vector<int>& taus) {
  const int n = static_cast<int>(taus.size());
  const int g = genus_from_dimension(taus);

  if (g == 0 && n == 3) return Rat(1);
  if (g == 1 && n == 1) return Rat(1, 24);

  // String equation.
  if (auto it = std::find(taus.begin(), taus.end(), 0); it != taus.end()) {
    std::vector<int> rest(taus.begin(), it);
    rest.insert(rest.end(), it + 1, taus.end());
    if (2 * g - 2 + n - 1 <= 0) return Rat(0);
    Rat total(0);
    for (std::size_t j = 0; j < rest.size(); ++j) {
      std::vector<int> y = rest;
      --y[j];
      total += psi_any(std::move(y));
    }
    return total;
  }

  // Dilaton equation.
  if (auto it = std::find(taus.begin(), taus.end(), 1); it != taus.end()) {
    std::vector<int> rest(taus.begin(), it);
    rest.insert(rest.end(), it + 1, taus.end());
    const int chi = 2 * g - 2 + n - 1;
    if (chi <= 0) return Rat(0);
    return Rat(chi) * psi_any(std::move(rest));
  }

  // All indices >= 2: solve the KdV equation at level a + 2 for <tau_a X>.
  const int a = taus.front();
  const std::vector<int> x(taus.begin() + 1, taus.end());
  const int level = a + 2;
  // (2n+1)(U + rest) = U + sum_j <tau_{n-1} X_j-> + kdv_rhs for U = <tau_{n-2} X>.
  Rat own(0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<int> y = x;
    --y[j];
    own += psi_any(with(y, {level - 1}));
  }
  return (kdv_rhs(level, x) + own - Rat(2 * level + 1) * string_twice_rest(level, x)) / Rat(2 * level);
}

Rat psi_sorted(std::vector<int> taus) {
  if (taus.empty()) return Rat(0);
  const int g = genus_from_dimension(taus);
  if (g < 0) return Rat(0);
  if (2 * g - 2 + static_cast<int>(taus.size()) <= 0) return Rat(0);
  auto& memo = psi_memo();
  if (auto hit = memo.find(taus)) return *hit;
  Rat v = psi_compute(taus);
  memo.insert(taus, v);
  return v;
}

}  // namespace

Rat psi_correlator(std::vector<int> taus) { return psi_any(std::move(taus)); }

Rat psi_correlator(int g, std::vector<int> taus) {
  if (genus_from_dimension(taus) != g) return Rat(0);
  return psi_any(std::move(taus));
}

std::size_t psi_memo_size() { return psi_memo().size(); }

Rat genus0_closed(const std::vector<int>& taus) {
  const int n = static_cast<int>(taus.size());
  if (n < 3) return Rat(0);
  int sum = 0;
  for (int k : taus) {
    if (k < 0) return Rat(0);
    sum += k;
  }
  if (sum != n - 3) return Rat(0);
  BigInt den = 1;
  for (int k : taus) den *= factorial(static_cast<unsigned long>(k));
  return Rat(factorial(static_cast<unsigned long>(n - 3)), den);
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) {
    if (total == 0 && parts == 0) out.emplace_back();
    return out;
  }
  if (total < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

std::vector<std::vector<int>> sorted_index_vectors(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (total < 0 || parts < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (static_cast<int>(cur.size()) == parts) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = std::min(left, cap); v >= 0; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

Rat n_point_eval(int g, const std::vector<Rat>& x) {
  const int l = static_cast<int>(x.size());
  if (g < 0 || 2 * g - 2 + l <= 0) throw UnstableRange("n-point function needs 2g-2+l > 0");
  Rat total(0);
  for (const auto& k : compositions(3 * g - 3 + l, l)) {
    const Rat c = psi_correlator(g, k);
    if (c.is_zero()) continue;
    Rat term = c;
    for (int i = 0; i < l; ++i) term *= pow(x[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]);
    total += term;
  }
  return total;
}

namespace {

Rat lift(const Rat& v, const Rat&) { return v; }
BigFloat lift(const Rat& v, const BigFloat& like) { return BigFloat(v, like.precision()); }

template <class T>
T series_eval(int g, const std::vector<T>& s) {
  const int n = static_cast<int>(s.size());
  if (g < 0 || n == 0 || 2 * g - 2 + n <= 0) throw UnstableRange("Kontsevich series needs 2g-2+n > 0");
  for (const auto& v : s)
    if (!(v > lift(Rat(0), v))) throw std::domain_error("Kontsevich series needs positive arguments");
  T total = lift(Rat(0), s.front());
  for (const auto& k : compositions(3 * g - 3 + n, n)) {
    const Rat c = psi_correlator(g, k);
    if (c.is_zero()) continue;
    Rat coeff = c;
    for (int ki : k) coeff *= Rat(double_factorial_odd(ki));
    T term = lift(coeff, s.front());
    for (int i = 0; i < n; ++i) {
      const T& si = s[static_cast<std::size_t>(i)];
      for (int e = 0; e < 2 * k[static_cast<std::size_t>(i)] + 1; ++e) term /= si;
    }
    total += term;
  }
  return total;
}

}  // namespace

Rat kontsevich_series_eval(int g, const std::vector<Rat>& s) { return series_eval(g, s); }
BigFloat kontsevich_series_eval(int g, const std::vector<BigFloat>& s) { return series_eval(g, s); }

}  // namespace hurwitz
