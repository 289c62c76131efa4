#include "hurwitz/hodge.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_count.hpp"

namespace hurwitz {

void HodgeTable::set(const Correlator& c, const Rat& v) { entries_[c] = v; }

bool HodgeTable::contains(const Correlator& c) const { return entries_.count(c) != 0; }

const Rat& HodgeTable::at(const Correlator& c) const {
  auto it = entries_.find(c);
  if (it == entries_.end()) throw MissingHodgeEntry("missing Hodge integral " + c.str());
  return it->second;
}

void HodgeTable::merge(const HodgeTable& other) {
  for (const auto& [c, v] : other.entries_) entries_[c] = v;
}

HodgeTable psi_table(int g, int l) {
  HodgeTable t;
  for (const auto& taus : sorted_index_vectors(3 * g - 3 + l, l)) t.set(Correlator(g, taus), psi_correlator(g, taus));
  return t;
}

namespace {

Rat elsv_prefactor(int g, const Partition& mu) {
  const int r = ram_count(g, mu);
  Rat v(factorial(static_cast<unsigned long>(r)), aut_order(mu));
  for (int m : mu.parts())
    v *= Rat(ipow(BigInt(m), static_cast<unsigned long>(m)), factorial(static_cast<unsigned long>(m)));
  return v;
}

}  // namespace

BigInt elsv_coefficient(const Partition& mu, const std::vector<int>& taus, int k) {
  std::vector<int> p = taus;
  std::sort(p.begin(), p.end());
  BigInt total = 0;
  do {
    BigInt term = 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= ipow(BigInt(mu.parts()[i]), static_cast<unsigned long>(p[i]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return k % 2 ? BigInt(-total) : total;
}

Rat elsv_normalized(int g, const Partition& mu, const Rat& h) { return h / elsv_prefactor(g, mu); }

Rat elsv_evaluate(int g, const Partition& mu, const HodgeTable& table) {
  const int l = mu.length();
  if (g < 0 || l == 0) throw UnstableRange("ELSV needs a nonempty profile");
  if (g == 0 && l == 1) return elsv_prefactor(g, mu) / Rat(BigInt(mu[0]) * mu[0]);
  if (g == 0 && l == 2) return elsv_prefactor(g, mu) / Rat(mu[0] + mu[1]);
  Rat sum(0);
  for (int k = 0; k <= g; ++k) {
    const int total = 3 * g - 3 + l - k;
    if (total < 0) continue;
    for (const auto& taus : compositions(total, l)) {
      const Rat& c = table.at(Correlator(g, taus, k));
      if (c.is_zero()) continue;
      Rat term = c;
      for (int i = 0; i < l; ++i) term *= Rat(ipow(BigInt(mu[i]), static_cast<unsigned long>(taus[static_cast<std::size_t>(i)])));
      if (k % 2) sum -= term;
      else sum += term;
    }
  }
  return elsv_prefactor(g, mu) * sum;
}

namespace {

std::vector<int> one_and_primes(int count) {
  std::vector<int> out{1};
  for (int p = 2; static_cast<int>(out.size()) < count; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

// Profiles with l distinct parts from the pool, ordered by largest part.
std::vector<Partition> pool_profiles(int l, int pool_size) {
  const auto pool = one_and_primes(pool_size);
  std::vector<Partition> out;
  for (int top = l - 1; top < pool_size; ++top) {
    std::vector<int> pick(static_cast<std::size_t>(l - 1));
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == l - 1) {
        std::vector<int> parts;
        for (int i : pick) parts.push_back(pool[static_cast<std::size_t>(i)]);
        parts.push_back(pool[static_cast<std::size_t>(top)]);
        out.emplace_back(std::move(parts));
        return;
      }
      for (int i = start; i < top; ++i) {
        pick[static_cast<std::size_t>(depth)] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

struct EchelonRow {
  std::size_t pivot;
  std::vector<BigInt> coeffs;
  Rat rhs;
};

// Fraction-free reduction of (coeffs | rhs) against rows with earlier pivots.
void reduce(std::vector<BigInt>& coeffs, Rat& rhs, const std::vector<EchelonRow>& basis) {
  for (const auto& b : basis) {
    const BigInt f = coeffs[b.pivot];
    if (f == 0) continue;
    const BigInt p = b.coeffs[b.pivot];
    for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] = p * coeffs[c] - f * b.coeffs[c];
    rhs = Rat(p) * rhs - Rat(f) * b.rhs;
  }
  BigInt content = 0;
  for (const auto& c : coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1) {
    for (auto& c : coeffs) c /= content;
    rhs /= Rat(content);
  }
}

}  // namespace

HodgeInversion hodge_invert(int g, int l, const HurwitzOracle& oracle, int pool_size) {
  if (g < 0 || l < 1 || 2 * g - 2 + l <= 0) throw UnstableRange("Hodge inversion needs 2g-2+l > 0");
  HodgeInversion out;
  for (int k = 0; k <= g; ++k)
    for (const auto& taus : sorted_index_vectors(3 * g - 3 + l - k, l)) out.unknowns.emplace_back(g, taus, k);
  const std::size_t n = out.unknowns.size();

  auto row_for = [&](const Partition& mu) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(n);
    for (const auto& u : out.unknowns) coeffs.push_back(elsv_coefficient(mu, u.taus, u.lambda));
    return coeffs;
  };

  std::vector<EchelonRow> basis;
  const auto profiles = pool_profiles(l, pool_size);
  std::size_t next = 0;
  while (basis.size() < n && next < profiles.size()) {
    const Partition& mu = profiles[next++];
    auto coeffs = row_for(mu);
    Rat rhs = elsv_normalized(g, mu, oracle(g, mu));
    reduce(coeffs, rhs, basis);
    auto it = std::find_if(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c != 0; });
    if (it == coeffs.end()) {
      if (!rhs.is_zero()) throw Error("Hodge inversion: inconsistent system at profile " + mu.str());
      continue;
    }
    basis.push_back({static_cast<std::size_t>(it - coeffs.begin()), std::move(coeffs), rhs});
    out.profiles.push_back(mu);
  }
  if (basis.size() < n) {
    std::string msg = "Hodge inversion: rank " + std::to_string(basis.size()) + " < " + std::to_string(n) +
                      " unknowns after profiles";
    for (const auto& mu : out.profiles) msg += " " + mu.str();
    throw RankDeficient(msg);
  }

  std::vector<Rat> x(n);
  for (auto b = basis.rbegin(); b != basis.rend(); ++b) {
    Rat acc = b->rhs;
    for (std::size_t c = 0; c < n; ++c)
      if (c != b->pivot && b->coeffs[c] != 0) acc -= Rat(b->coeffs[c]) * x[c];
    x[b->pivot] = acc / Rat(b->coeffs[b->pivot]);
  }
  for (std::size_t i = 0; i < n; ++i) out.table.set(out.unknowns[i], x[i]);

  while (out.held_out.size() < 2) {
    if (next >= profiles.size()) throw RankDeficient("Hodge inversion: no profiles left to hold out");
    const Partition& mu = profiles[next++];
    const auto coeffs = row_for(mu);
    Rat lhs(0);
    for (std::size_t i = 0; i < n; ++i) lhs += Rat(coeffs[i]) * x[i];
    if (lhs != elsv_normalized(g, mu, oracle(g, mu)))
      throw Error("Hodge inversion: held-out profile " + mu.str() + " has nonzero residual");
    out.held_out.push_back(mu);
  }
  return out;
}

const HodgeTable& inverted_hodge_table(int g, int l) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, HodgeTable> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(g, l);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto inv = hodge_invert(g, l, [](int gg, const Partition& mu) { return hurwitz_degeneration(gg, mu); });
  return cache.emplace(key, std::move(inv.table)).first->second;
}

}  // namespace hurwitz
