#include "hurwitz/toda.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_count.hpp"

namespace hurwitz {

Rat TruncatedSeries::coeff(int lambda, const Partition& mu) const {
  const auto it = terms_.find({lambda, mu});
  return it == terms_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::add(int lambda, const Partition& mu, const Rat& c) {
  if (mu.size() > dmax_ || lambda > lmax_ || c == Rat(0)) return;
  auto [it, fresh] = terms_.try_emplace({lambda, mu}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == Rat(0)) terms_.erase(it);
  }
}

void TruncatedSeries::set(int lambda, const Partition& mu, const Rat& c) {
  terms_.erase({lambda, mu});
  add(lambda, mu, c);
}

int TruncatedSeries::lambda_order() const {
  int o = lmax_ + 1;
  for (const auto& [k, c] : terms_) o = std::min(o, k.first);
  return o;
}

bool TruncatedSeries::has_constant_term() const {
  for (const auto& [k, c] : terms_)
    if (k.second.empty()) return true;
  return false;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rat& c) {
  if (c == Rat(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.dmax_, b.dmax_), std::min(a.lmax_, b.lmax_));
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.second.size() + kb.second.size() > out.dmax_) continue;
      out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  return out;
}

namespace {

void require_nilpotent(const TruncatedSeries& s, const char* what) {
  if (s.has_constant_term()) throw std::domain_error(std::string(what) + " needs a series without q^0 part");
  if (s.lambda_order() < 0) throw std::domain_error(std::string(what) + " needs lambda order >= 0");
}

TruncatedSeries one_like(const TruncatedSeries& s) {
  TruncatedSeries one(s.dmax(), s.lmax());
  one.add(0, Partition{}, Rat(1));
  return one;
}

}  // namespace

TruncatedSeries series_exp(const TruncatedSeries& s) {
  require_nilpotent(s, "series exp");
  // S^k vanishes for k > dmax.
  TruncatedSeries out = one_like(s);
  TruncatedSeries power = one_like(s);
  for (int k = 1; k <= s.dmax(); ++k) {
    power = power * s;
    power *= Rat(1, k);
    out += power;
  }
  return out;
}

TruncatedSeries series_log1p(const TruncatedSeries& s) {
  require_nilpotent(s, "series log");
  TruncatedSeries out(s.dmax(), s.lmax());
  TruncatedSeries power = one_like(s);
  for (int k = 1; k <= s.dmax(); ++k) {
    power = power * s;
    TruncatedSeries term = power;
    term *= Rat(k % 2 == 1 ? 1 : -1, k);
    out += term;
  }
  return out;
}

TruncatedSeries build_H(int dmax, int lmax, const Budget& budget) {
  if (dmax < 1 || lmax < -2) throw std::invalid_argument("build_H needs dmax >= 1 and lmax >= -2");
  if (dmax > budget.toda_max_degree || lmax > budget.toda_max_lambda)
    throw BudgetExceeded("Hurwitz series beyond degree " + std::to_string(budget.toda_max_degree) +
                         " or lambda exponent " + std::to_string(budget.toda_max_lambda));
  TruncatedSeries h(dmax, lmax);
  for (int d = 1; d <= dmax; ++d)
    for (const auto& mu : partitions_of(d))
      for (int g = 0; 2 * g - 2 <= lmax; ++g) {
        const int r = ram_count_unchecked(g, mu);
        if (r < 0) continue;
        h.add(2 * g - 2, mu, hurwitz_degeneration(g, mu) / Rat(factorial(static_cast<unsigned long>(r))));
      }
  return h;
}

TruncatedSeries restrict_to_p1(const TruncatedSeries& h) {
  TruncatedSeries out(h.dmax(), h.lmax());
  for (const auto& [k, c] : h.terms())
    if (k.second.empty() || k.second[0] == 1) out.add(k.first, k.second, c);
  return out;
}

namespace {

// H(y0 + lambda) + H(y0 - lambda) - 2H: the q^d term picks up
// 2 sum_{j>=1} (d lambda)^(2j) / (2j)!.
TruncatedSeries second_difference(const TruncatedSeries& h, int lmax) {
  TruncatedSeries s(h.dmax(), lmax);
  for (const auto& [k, c] : h.terms()) {
    const int d = k.second.size();
    Rat dpow(1);
    for (int j = 1; k.first + 2 * j <= lmax; ++j) {
      dpow *= Rat(d) * Rat(d);
      s.add(k.first + 2 * j, k.second,
            Rat(2) * dpow * c / Rat(factorial(static_cast<unsigned long>(2 * j))));
    }
  }
  if (s.lambda_order() < 0) throw std::logic_error("second difference has negative lambda order");
  return s;
}

TodaResidual compare(const TruncatedSeries& lhs, const TruncatedSeries& rhs, int wd, int wl) {
  TodaResidual r;
  r.window_degree = wd;
  r.window_lambda = wl;
  const TruncatedSeries diff = lhs - rhs;
  for (const auto& [k, c] : diff.terms()) {
    if (k.second.size() <= wd && k.first <= wl) {
      if (abs(c) > r.max_abs) r.max_abs = abs(c);
    } else {
      ++r.discarded_nonzero;
    }
  }
  for (int d = 0; d <= wd; ++d) r.checked += static_cast<long>(partitions_of(d).size()) * (wl / 2 + 1);
  return r;
}

}  // namespace

TodaResidual toda_residual(const TruncatedSeries& h) {
  const int wl = h.lmax() + 2;
  const TruncatedSeries lhs = series_exp(second_difference(h, wl));
  // lambda^2 e^(-y0) d/dp_1 d/dy0: lambda^L q^d p_mu -> d m_1(mu) lambda^(L+2) q^(d-1) p_(mu - 1).
  TruncatedSeries rhs(h.dmax(), wl);
  for (const auto& [k, c] : h.terms()) {
    const int m1 = k.second.multiplicity(1);
    if (m1 == 0) continue;
    rhs.add(k.first + 2, k.second.without(k.second.length() - 1), Rat(k.second.size()) * Rat(m1) * c);
  }
  return compare(lhs, rhs, h.dmax() - 1, wl);
}

TodaResidual htilde_residual(const TruncatedSeries& h) {
  const TruncatedSeries ht = restrict_to_p1(h);
  const int wl = ht.lmax() + 2;
  const TruncatedSeries lhs = series_exp(second_difference(ht, wl));
  // lambda^2 e^(-y0) d^2/dy0^2: lambda^L q^d -> d^2 lambda^(L+2) q^(d-1).
  TruncatedSeries rhs(ht.dmax(), wl);
  for (const auto& [k, c] : ht.terms()) {
    if (k.second.empty()) continue;
    const int d = k.second.size();
    rhs.add(k.first + 2, k.second.without(k.second.length() - 1), Rat(d) * Rat(d) * c);
  }
  TodaResidual r = compare(lhs, rhs, ht.dmax() - 1, wl);
  r.checked = static_cast<long>(ht.dmax()) * (wl / 2 + 1);
  return r;
}

}  // namespace hurwitz
