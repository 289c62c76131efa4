#include "hurwitz/hurwitz_count.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include <omp.h>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Permutation Permutation::identity(int degree) {
  if (degree < 0 || degree > kMaxSheets) throw std::invalid_argument("permutation degree out of range");
  Permutation p;
  p.degree = degree;
  for (int i = 0; i < degree; ++i) p.image[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::of_cycle_type(const Partition& mu) {
  Permutation p = identity(mu.size());
  int start = 0;
  for (int m : mu.parts()) {
    for (int k = 0; k < m; ++k)
      p.image[static_cast<std::size_t>(start + k)] = static_cast<std::uint8_t>(start + (k + 1) % m);
    start += m;
  }
  return p;
}

Partition Permutation::cycle_type() const {
  std::array<bool, kMaxSheets> seen{};
  std::vector<int> lengths;
  for (int i = 0; i < degree; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = image[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

int Permutation::cycle_count() const { return cycle_type().length(); }

Permutation TranspositionTuple::product() const {
  Permutation p = Permutation::identity(degree);
  for (const auto& t : entries) std::swap(p.image[static_cast<std::size_t>(t.a)], p.image[static_cast<std::size_t>(t.b)]);
  return p;
}

bool TranspositionTuple::transitive() const {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int comps = degree;
  for (const auto& t : entries) {
    const int ra = find(t.a), rb = find(t.b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --comps;
    }
  }
  return comps <= 1;
}

std::vector<Transposition> transpositions(int degree) {
  std::vector<Transposition> out;
  for (int a = 0; a < degree; ++a)
    for (int b = a + 1; b < degree; ++b) out.push_back({a, b});
  return out;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::monodromy: return "monodromy";
    case Method::degeneration: return "degeneration";
    case Method::elsv: return "elsv";
    case Method::closed_form: return "closed-form";
  }
  return "?";
}

namespace {

void check_space(int degree, int r, const Budget& budget, const char* what) {
  if (degree > budget.monodromy_max_degree)
    throw BudgetExceeded(std::string(what) + ": degree " + std::to_string(degree) + " exceeds cap " +
                         std::to_string(budget.monodromy_max_degree));
  const auto t = static_cast<long double>(degree) * (degree - 1) / 2;
  long double space = 1;
  for (int i = 0; i < r; ++i) space *= t;
  if (space > static_cast<long double>(budget.monodromy_max_space))
    throw BudgetExceeded(std::string(what) + ": search space " + std::to_string(static_cast<double>(space)) +
                         " exceeds cap " + std::to_string(budget.monodromy_max_space));
}

// Depth-first enumeration of transposition tuples with the product kept
// incrementally. Each step changes the cycle count by exactly one and merges
// at most two support components, which gives the pruning bounds.
class TupleSearch {
public:
  TupleSearch(int degree, int r, int target_cycles, bool need_transitive,
              std::function<bool(const Permutation&)> accept)
      : degree_(degree),
        r_(r),
        target_cycles_(target_cycles),
        need_transitive_(need_transitive),
        accept_(std::move(accept)),
        moves_(transpositions(degree)) {}

  std::size_t first_choices() const { return moves_.size(); }

  // Count tuples whose first entry is moves_[first].
  std::uint64_t count_with_first(std::size_t first) const {
    State s = initial();
    apply(s, moves_[first]);
    return dfs(s, 1);
  }

  std::uint64_t count_all_serial() const {
    if (r_ == 0) return leaf(initial()) ? 1 : 0;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < moves_.size(); ++i) total += count_with_first(i);
    return total;
  }

  std::uint64_t count_all_parallel() const {
    if (r_ == 0) return leaf(initial()) ? 1 : 0;
    std::uint64_t total = 0;
    const auto n = static_cast<long>(moves_.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long i = 0; i < n; ++i) total += count_with_first(static_cast<std::size_t>(i));
    return total;
  }

  void collect(std::vector<TranspositionTuple>& out) const {
    std::vector<Transposition> path;
    collect_rec(initial(), 0, path, out);
  }

private:
  struct State {
    Permutation perm;
    std::array<std::uint8_t, kMaxSheets> comp{};
    int cycles = 0;
    int comps = 0;
  };

  State initial() const {
    State s;
    s.perm = Permutation::identity(degree_);
    for (int i = 0; i < degree_; ++i) s.comp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    s.cycles = degree_;
    s.comps = degree_;
    return s;
  }

  void apply(State& s, const Transposition& t) const {
    // a and b on the same cycle of perm: the product splits it.
    bool same = false;
    for (int j = s.perm.image[static_cast<std::size_t>(t.a)];; j = s.perm.image[static_cast<std::size_t>(j)]) {
      if (j == t.b) same = true;
      if (j == t.a) break;
    }
    s.cycles += same ? 1 : -1;
    std::swap(s.perm.image[static_cast<std::size_t>(t.a)], s.perm.image[static_cast<std::size_t>(t.b)]);
    const auto ca = s.comp[static_cast<std::size_t>(t.a)], cb = s.comp[static_cast<std::size_t>(t.b)];
    if (ca != cb) {
      for (int i = 0; i < degree_; ++i)
        if (s.comp[static_cast<std::size_t>(i)] == cb) s.comp[static_cast<std::size_t>(i)] = ca;
      --s.comps;
    }
  }

  bool feasible(const State& s, int depth) const {
    const int rem = r_ - depth;
    if (std::abs(s.cycles - target_cycles_) > rem) return false;
    if (need_transitive_ && s.comps - 1 > rem) return false;
    return true;
  }

  bool leaf(const State& s) const {
    if (s.cycles != target_cycles_) return false;
    if (need_transitive_ && s.comps != 1) return false;
    return accept_(s.perm);
  }

  std::uint64_t dfs(const State& s, int depth) const {
    if (!feasible(s, depth)) return 0;
    if (depth == r_) return leaf(s) ? 1 : 0;
    std::uint64_t total = 0;
    for (const auto& t : moves_) {
      State next = s;
      apply(next, t);
      total += dfs(next, depth + 1);
    }
    return total;
  }

  void collect_rec(const State& s, int depth, std::vector<Transposition>& path,
                   std::vector<TranspositionTuple>& out) const {
    if (!feasible(s, depth)) return;
    if (depth == r_) {
      if (leaf(s)) out.push_back({degree_, path});
      return;
    }
    for (const auto& t : moves_) {
      State next = s;
      apply(next, t);
      path.push_back(t);
      collect_rec(next, depth + 1, path, out);
      path.pop_back();
    }
  }

  int degree_;
  int r_;
  int target_cycles_;
  bool need_transitive_;
  std::function<bool(const Permutation&)> accept_;
  std::vector<Transposition> moves_;
};

TupleSearch class_search(int g, const Partition& mu, const Budget& budget, const char* what) {
  if (mu.empty()) throw std::invalid_argument("empty ramification profile");
  const int r = ram_count(g, mu);
  check_space(mu.size(), r, budget, what);
  return TupleSearch(mu.size(), r, mu.length(), true,
                     [mu](const Permutation& p) { return p.cycle_type() == mu; });
}

}  // namespace

std::uint64_t count_monodromy_tuples(int g, const Partition& mu, const Budget& budget) {
  return class_search(g, mu, budget, "monodromy").count_all_parallel();
}

std::uint64_t count_monodromy_tuples_serial(int g, const Partition& mu, const Budget& budget) {
  return class_search(g, mu, budget, "monodromy").count_all_serial();
}

std::vector<TranspositionTuple> list_monodromy_tuples(int g, const Partition& mu, const Budget& budget) {
  std::vector<TranspositionTuple> out;
  class_search(g, mu, budget, "monodromy").collect(out);
  return out;
}

std::uint64_t count_transitive_tuples_with_product(int r, const Permutation& target, const Budget& budget) {
  check_space(target.degree, r, budget, "monodromy");
  TupleSearch search(target.degree, r, target.cycle_count(), true,
                     [target](const Permutation& p) { return p == target; });
  return search.count_all_parallel();
}

Rat hurwitz_monodromy(int g, const Partition& mu, const Budget& budget) {
  const std::uint64_t count = count_monodromy_tuples(g, mu, budget);
  return Rat(BigInt(static_cast<unsigned long>(count)), factorial(static_cast<unsigned long>(mu.size())));
}

BigInt cycle_factorization_count(const Partition& mu, int k, const Budget& budget) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const Permutation target = Permutation::of_cycle_type(mu);
  check_space(target.degree, k, budget, "cycle factorization");
  TupleSearch search(target.degree, k, target.cycle_count(), false,
                     [target](const Permutation& p) { return p == target; });
  return BigInt(static_cast<unsigned long>(search.count_all_parallel()));
}

BigInt cycle_factorization_formula(const Partition& mu) {
  int k = 0;
  for (int m : mu.parts()) k += m - 1;
  Rat v(factorial(static_cast<unsigned long>(k)));
  for (int m : mu.parts())
    v *= Rat(ipow(BigInt(m), static_cast<unsigned long>(m - 1)), factorial(static_cast<unsigned long>(m)));
  if (!v.is_integer()) throw std::logic_error("cycle factorization formula is not integral");
  return v.num();
}

// --- degeneration recursion ---

Rat DegenerationTable::marked(int g, const Partition& mu) {
  if (g < 0 || mu.empty()) return Rat(0);
  const int r = ram_count_unchecked(g, mu);
  if (r < 0) return Rat(0);
  if (r == 0) return (g == 0 && mu == Partition{1}) ? Rat(1) : Rat(0);
  const auto key = std::make_pair(g, mu);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Rat v = compute(g, mu);
  memo_.emplace(key, v);
  return v;
}

Rat DegenerationTable::hurwitz(int g, const Partition& mu) {
  ram_count(g, mu);
  return marked(g, mu) / Rat(aut_order(mu));
}

namespace {

// Distinct part values with multiplicities, in decreasing value order.
std::vector<std::pair<int, int>> value_counts(const Partition& mu) {
  std::vector<std::pair<int, int>> vc;
  for (int p : mu.parts()) {
    if (!vc.empty() && vc.back().first == p) ++vc.back().second;
    else vc.emplace_back(p, 1);
  }
  return vc;
}

}  // namespace

Rat DegenerationTable::compute(int g, const Partition& mu) {
  const int r = ram_count_unchecked(g, mu);
  const auto vc = value_counts(mu);
  const int kinds = static_cast<int>(vc.size());
  Rat total(0);

  // Labelled cells: sums over positions are grouped by part value, weighted
  // by the number of positions that realise each choice.
  // Case I: the removed edge separates cells i != j.
  for (int x = 0; x < kinds; ++x) {
    for (int y = 0; y < kinds; ++y) {
      const auto [u, cu] = vc[static_cast<std::size_t>(x)];
      const auto [v, cv] = vc[static_cast<std::size_t>(y)];
      const long ordered_pairs = x == y ? static_cast<long>(cu) * (cu - 1) : static_cast<long>(cu) * cv;
      if (ordered_pairs == 0) continue;
      std::vector<int> rest = mu.parts();
      rest.erase(std::find(rest.begin(), rest.end(), u));
      rest.erase(std::find(rest.begin(), rest.end(), v));
      rest.push_back(u + v);
      const Rat h = marked(g, Partition(rest));
      if (h.is_zero()) continue;
      total += Rat(ordered_pairs * (u + v), 2) * h;
    }
  }

  for (int x = 0; x < kinds; ++x) {
    const auto [m, cm] = vc[static_cast<std::size_t>(x)];
    std::vector<int> rest = mu.parts();
    rest.erase(std::find(rest.begin(), rest.end(), m));
    const auto rest_vc = value_counts(Partition(rest));

    for (int a1 = 1; a1 < m; ++a1) {
      const int a2 = m - a1;
      const Rat weight = Rat(static_cast<long>(cm) * a1 * a2, 2);

      // Case II: same cell on both sides, edge not disconnecting.
      {
        std::vector<int> p = rest;
        p.push_back(a1);
        p.push_back(a2);
        const Rat h = marked(g - 1, Partition(p));
        if (!h.is_zero()) total += weight * h;
      }

      // Case III: disconnecting edge; ordered splittings of the remaining
      // labelled cells, enumerated as sub-multisets with binomial weights.
      std::vector<int> choose(rest_vc.size(), 0);
      while (true) {
        std::vector<int> first{a1}, second{a2};
        BigInt ways = 1;
        for (std::size_t t = 0; t < rest_vc.size(); ++t) {
          const auto [val, cnt] = rest_vc[t];
          ways *= binomial(static_cast<unsigned long>(cnt), static_cast<unsigned long>(choose[t]));
          for (int c = 0; c < choose[t]; ++c) first.push_back(val);
          for (int c = choose[t]; c < cnt; ++c) second.push_back(val);
        }
        const Partition p1(first), p2(second);
        for (int g1 = 0; g1 <= g; ++g1) {
          const int r1 = ram_count_unchecked(g1, p1);
          const int r2 = ram_count_unchecked(g - g1, p2);
          if (r1 < 0 || r2 < 0) continue;
          const Rat h1 = marked(g1, p1);
          if (h1.is_zero()) continue;
          const Rat h2 = marked(g - g1, p2);
          if (h2.is_zero()) continue;
          const BigInt eps = binomial(static_cast<unsigned long>(r - 1), static_cast<unsigned long>(r1));
          total += weight * Rat(BigInt(ways * eps)) * h1 * h2;
        }
        std::size_t t = 0;
        while (t < rest_vc.size() && choose[t] == rest_vc[t].second) choose[t++] = 0;
        if (t == rest_vc.size()) break;
        ++choose[t];
      }
    }
  }
  return total;
}

namespace {
std::mutex& degeneration_mutex() {
  static std::mutex m;
  return m;
}
DegenerationTable& shared_degeneration_table() {
  static DegenerationTable table;
  return table;
}
}  // namespace

Rat hurwitz_degeneration(int g, const Partition& mu) {
  std::lock_guard lock(degeneration_mutex());
  return shared_degeneration_table().hurwitz(g, mu);
}

Rat hurwitz_degeneration_marked(int g, const Partition& mu) {
  std::lock_guard lock(degeneration_mutex());
  ram_count(g, mu);
  return shared_degeneration_table().marked(g, mu);
}

Rat hurwitz_closed_genus0(ClosedForm variant, int n) {
  if (n < 1) throw std::invalid_argument("closed form needs n >= 1");
  const Rat nn(n);
  switch (variant) {
    case ClosedForm::one_part:
      return pow(nn, n - 3);
    case ClosedForm::trivial_profile:
      return Rat(factorial(static_cast<unsigned long>(2 * n - 2)), factorial(static_cast<unsigned long>(n))) *
             pow(nn, n - 3);
  }
  return Rat(0);
}

}  // namespace hurwitz
