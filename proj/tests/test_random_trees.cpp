#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "gen.hpp"
#include "hurwitz/edge_tree.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/perimeter.hpp"
#include "hurwitz/tree_count.hpp"
#include "hurwitz/tree_stats.hpp"

using namespace hurwitz;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

struct Dsu {
  std::vector<int> up, size;
  explicit Dsu(int n) : up(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
    std::iota(up.begin(), up.end(), 0);
  }
  int find(int x) {
    while (up[static_cast<std::size_t>(x)] != x) x = up[static_cast<std::size_t>(x)];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    up[static_cast<std::size_t>(a)] = b;
    size[static_cast<std::size_t>(b)] += size[static_cast<std::size_t>(a)];
    return true;
  }
};

EdgeList normalized(EdgeList e) {
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<std::pair<int, int>> complete_graph_edges(int n) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  return all;
}

// Spanning trees of K_n from edge subsets.
std::set<EdgeList> spanning_trees(int n) {
  const auto all = complete_graph_edges(n);
  std::set<EdgeList> out;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    if (__builtin_popcount(mask) != n - 1) continue;
    Dsu dsu(n);
    EdgeList e;
    bool ok = true;
    for (std::size_t i = 0; i < all.size() && ok; ++i)
      if (mask >> i & 1u) {
        ok = dsu.unite(all[i].first, all[i].second);
        e.push_back(all[i]);
      }
    if (ok) out.insert(e);
  }
  return out;
}

// Forests with n-k edges on n vertices, each weighted by the product of
// component sizes.
long rooted_forests(int n, int k) {
  const auto all = complete_graph_edges(n);
  long total = 0;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    if (__builtin_popcount(mask) != n - k) continue;
    Dsu dsu(n);
    bool ok = true;
    for (std::size_t i = 0; i < all.size() && ok; ++i)
      if (mask >> i & 1u) ok = dsu.unite(all[i].first, all[i].second);
    if (!ok) continue;
    long w = 1;
    for (int v = 0; v < n; ++v)
      if (dsu.find(v) == v) w *= dsu.size[static_cast<std::size_t>(v)];
    total += w;
  }
  return total;
}

// Vertex-name-free key: the incident label set of every vertex, and those of
// the root and the top.
std::vector<std::vector<int>> tree_key(const EdgeTree& t) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(t.n));
  for (std::size_t k = 0; k < t.edges.size(); ++k) {
    sets[static_cast<std::size_t>(t.edges[k].first)].push_back(static_cast<int>(k));
    sets[static_cast<std::size_t>(t.edges[k].second)].push_back(static_cast<int>(k));
  }
  std::vector<std::vector<int>> key = sets;
  std::sort(key.begin(), key.end());
  key.push_back(sets[static_cast<std::size_t>(t.root)]);
  key.push_back(sets[static_cast<std::size_t>(t.top)]);
  return key;
}

void check_sample_bounds(const EdgeTree& t) {
  const SemiperimeterPair sp = semiperimeters(t);
  const int tk = trunk_length(t);
  CHECK(sp.root.sign() >= 0);
  CHECK(sp.top.sign() >= 0);
  Rat excess = sp.root + sp.top - Rat(t.n);
  if (excess.sign() < 0) excess = -excess;
  CHECK(excess <= Rat(2));
  Rat gap = sp.root - Rat(sp.top_position);
  if (gap.sign() < 0) gap = -gap;
  CHECK(gap <= Rat(tk));
  CHECK(tk >= 2);
  const int rc = root_component_size(t);
  CHECK(rc >= 1);
  CHECK(rc <= t.n - 1);
  const TreeSummary s = summarize(t);
  CHECK(s.trunk == tk);
  CHECK(s.root_component == rc);
  CHECK(s.root_valence == valence(t, t.root));
  CHECK(s.semiperimeters.root == sp.root);
  CHECK(s.semiperimeters.top == sp.top);
}

}  // namespace

TEST_CASE("Pruefer decoding is a bijection onto spanning trees") {
  for (int n = 2; n <= 6; ++n) {
    std::set<EdgeList> decoded;
    std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
    while (true) {
      const EdgeList e = pruefer_decode(n, code);
      CHECK(static_cast<int>(e.size()) == n - 1);
      decoded.insert(normalized(e));
      std::size_t i = 0;
      while (i < code.size() && ++code[i] == n) code[i++] = 0;
      if (i == code.size()) break;
    }
    const auto trees = spanning_trees(n);
    CHECK(decoded.size() == static_cast<std::size_t>(std::pow(n, n - 2) + 0.5));
    CHECK(decoded == trees);
    std::set<EdgeList> listed;
    for (const auto& e : labeled_trees(n)) listed.insert(normalized(e));
    CHECK(listed == trees);
  }
}

TEST_CASE("tree class counts on the documented examples") {
  CHECK(count_trees(TreeClass::V, 3) == Rat(3));
  CHECK(count_trees(TreeClass::E, 2) == Rat(1, 2));
  CHECK(count_trees(TreeClass::E11, 4) == Rat(48));
  CHECK(count_trees(TreeClass::T, 4) == Rat(16, 24));
  CHECK(parse_tree_class(to_string(TreeClass::V11)) == TreeClass::V11);
  CHECK(all_tree_classes().size() == 9);
}

TEST_CASE("closed-form tree counts match exhaustive enumeration") {
  for (TreeClass c : all_tree_classes())
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(to_string(c));
      CAPTURE(n);
      CHECK(count_trees(c, n) == brute_force_tree_count(c, n));
    }
}

TEST_CASE("unlabeled trees weighted by automorphisms") {
  for (int n = 2; n <= 7; ++n)
    CHECK(count_trees(TreeClass::T, n) ==
          Rat(ipow(BigInt(n), static_cast<unsigned long>(n - 2)), factorial(static_cast<unsigned long>(n))));
}

TEST_CASE("rooted forests") {
  CHECK(forest_count(3, 3) == 1);
  CHECK(forest_count(3, 1) == 9);
  CHECK(forest_count(4, 2) == 48);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(forest_count(n, k) == rooted_forests(n, k));
      CHECK(brute_force_forest_count(n, k) == rooted_forests(n, k));
    }
}

TEST_CASE("Cayley identity") {
  for (int n = 2; n <= 6; ++n) {
    const auto lhs = cayley_tree_side(n);
    CHECK(lhs == cayley_polynomial_side(n));
    BigInt total = 0;
    for (const auto& [vals, c] : lhs) {
      CHECK(std::accumulate(vals.begin(), vals.end(), 0) == 2 * (n - 1));
      total += c;
    }
    CHECK(total == ipow(BigInt(n), static_cast<unsigned long>(n - 2)));
  }
}

TEST_CASE("trunk and root component on small trees") {
  EdgeTree path{3, {{0, 1}, {1, 2}}, 0, 2};
  path.validate();
  CHECK(trunk_length(path) == 3);
  CHECK(trunk_path(path) == std::vector<int>{0, 1, 2});
  CHECK(root_component_size(path) == 1);
  EdgeTree pair{2, {{0, 1}}, 0, 1};
  CHECK(trunk_length(pair) == 2);
  CHECK(root_component_size(pair) == 1);
  check_sample_bounds(pair);
  EdgeTree star{4, {{0, 1}, {0, 2}, {0, 3}}, 0, 1};
  CHECK(root_component_size(star) == 3);
  CHECK(valence(star, 0) == 3);
  EdgeTree bad{3, {{0, 1}, {0, 1}}, 0, 2};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  EdgeTree same{2, {{0, 1}}, 1, 1};
  CHECK_THROWS_AS(same.validate(), std::invalid_argument);
}

TEST_CASE("semiperimeter bounds hold on every element of E11(5)") {
  const int n = 5;
  long checked = 0;
  for (const auto& base : labeled_trees(n)) {
    std::vector<int> order(static_cast<std::size_t>(n - 1));
    std::iota(order.begin(), order.end(), 0);
    do {
      EdgeTree t;
      t.n = n;
      for (int k : order) t.edges.push_back(base[static_cast<std::size_t>(k)]);
      for (int r = 0; r < n; ++r)
        for (int top = 0; top < n; ++top) {
          if (r == top) continue;
          t.root = r;
          t.top = top;
          check_sample_bounds(t);
          ++checked;
        }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  CHECK(checked == 125 * 24 * 20);
}

TEST_CASE("sampled trees satisfy the per-sample bounds") {
  for (int n : {2, 3, 5, 10, 50, 200}) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const EdgeTree t = sample_edge_tree(n, 1000 * static_cast<std::uint64_t>(n) + i);
      t.validate();
      CHECK(t.n == n);
      check_sample_bounds(t);
    }
  }
}

TEST_CASE("semiperimeters move by at most the trunk under monotone relabeling") {
  Gen gen(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.integer(2, 60);
    const EdgeTree t = sample_edge_tree(n, 7000 + static_cast<std::uint64_t>(trial));
    const int modulus = gen.integer(n - 1, 4 * n);
    std::vector<int> pool(static_cast<std::size_t>(modulus));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), gen.rng);
    std::vector<int> relabel(pool.begin(), pool.begin() + (n - 1));
    std::sort(relabel.begin(), relabel.end());
    const SemiperimeterPair a = semiperimeters(t), b = semiperimeters(t, relabel, modulus);
    Rat diff = a.root - b.root;
    if (diff.sign() < 0) diff = -diff;
    CHECK(diff <= Rat(trunk_length(t)));
  }
}

TEST_CASE("sampling E11(3) is uniform") {
  const long draws = 100000;
  std::map<std::vector<std::vector<int>>, long> freq;
  for (long i = 0; i < draws; ++i) {
    auto rng = sample_rng(99, static_cast<std::uint64_t>(i));
    ++freq[tree_key(sample_edge_tree(3, rng))];
  }
  CHECK(freq.size() == 6);
  const double p = 1.0 / 6, sigma = std::sqrt(p * (1 - p) / draws);
  for (const auto& [key, c] : freq) CHECK(std::abs(static_cast<double>(c) / draws - p) < 3 * sigma);
  const EdgeTree two = sample_edge_tree(2, 5);
  CHECK(two.edges.size() == 1);
  CHECK(two.root != two.top);
}

TEST_CASE("serial and parallel observations agree") {
  const auto a = observe_trees(300, 2000, 17), b = observe_trees_serial(300, 2000, 17);
  REQUIRE(a.size() == b.size());
  bool same = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    same = same && a[i].trunk == b[i].trunk && a[i].root_component == b[i].root_component &&
           a[i].root_valence == b[i].root_valence && a[i].root_semiperimeter == b[i].root_semiperimeter &&
           a[i].top_semiperimeter == b[i].top_semiperimeter;
  CHECK(same);
}

TEST_CASE("statistical helpers") {
  CHECK(chi_square_upper_quantile(1, 0.05) == doctest::Approx(3.841459).epsilon(1e-6));
  CHECK(chi_square_upper_quantile(2, 1e-4) == doctest::Approx(-2 * std::log(1e-4)).epsilon(1e-9));
  CHECK(chi_square({10, 10}, {0.5, 0.5}) == doctest::Approx(0));
  CHECK(chi_square({15, 5}, {0.5, 0.5}) == doctest::Approx(5));
  const auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
  CHECK(ks_distance({0.5}, uniform) == doctest::Approx(0.5));
  CHECK(ks_distance({0.25, 0.75}, uniform) == doctest::Approx(0.25));
  CHECK(ks_threshold(10000) == doctest::Approx(3 * 1.63 / 100));
  CHECK(rayleigh_cdf(1) == doctest::Approx(1 - std::exp(-0.5)));
  CHECK(poisson_pmf(2, 1) == doctest::Approx(std::exp(-1.0) / 2));
  CHECK(borel_pmf(1) == doctest::Approx(std::exp(-1.0)));
  CHECK(borel_pmf(2) == doctest::Approx(2 * std::exp(-2.0) / 2));
}

TEST_CASE("Borel law is a probability measure") {
  // Partial sum to M plus the asymptotic remainder sqrt(2 / (pi M)).
  const int m = 1000000;
  double s = 0;
  for (int k = m; k >= 1; --k) s += borel_pmf(k);
  CHECK(std::abs(s + std::sqrt(2 / (M_PI * m)) - 1) < 1e-6);
  for (int cut : {30, 60, 1000}) {
    double partial = 0;
    for (int k = 1; k <= cut; ++k) partial += borel_pmf(k);
    CHECK(partial + borel_tail(cut) == doctest::Approx(1).epsilon(1e-9));
    CHECK(borel_tail(cut) == doctest::Approx(std::sqrt(2 / (M_PI * cut))).epsilon(0.05));
  }
}

TEST_CASE("statistic tests reject undersized runs") {
  CHECK_THROWS_AS(stat_test(TreeStatistic::trunk, 50, 10000, 1), InsufficientSamples);
  CHECK_THROWS_AS(stat_test(TreeStatistic::trunk, 1000, 999, 1), InsufficientSamples);
  CHECK(parse_tree_statistic("semiper") == TreeStatistic::semiper);
  CHECK_THROWS(parse_tree_statistic("nope"));
}

TEST_CASE("limit laws at moderate size") {
  const auto obs = observe_trees(1000, 10000, 3);
  for (TreeStatistic s : {TreeStatistic::trunk, TreeStatistic::rootcomp, TreeStatistic::semiper, TreeStatistic::valence}) {
    const StatReport r = stat_report(s, 1000, 3, obs);
    CAPTURE(r.statistic);
    CAPTURE(r.value);
    CHECK(r.pass);
    CHECK(r.value < r.threshold);
  }
}

TEST_CASE("perimeter weights") {
  for (long n = 2; n <= 30; ++n) {
    const double direct = std::exp(std::log(static_cast<double>(n - 1)) + (n - 2) * std::log(static_cast<double>(n)) -
                                   static_cast<double>(n) - std::lgamma(static_cast<double>(n)));
    CHECK(perimeter_weight(n) == doctest::Approx(direct).epsilon(1e-12));
  }
  // w_n ~ 1 / sqrt(2 pi n) for large n.
  CHECK(perimeter_weight(1000000) * std::sqrt(2 * M_PI * 1e6) == doctest::Approx(1).epsilon(1e-3));
}

TEST_CASE("perimeter Laplace estimate: inputs, symmetry and determinism") {
  CHECK_THROWS_AS(perimeter_laplace(1, 1, 999, 1, 1), InsufficientSamples);
  CHECK_THROWS_AS(perimeter_laplace(1, 1, 1000, 0, 1), InsufficientSamples);
  CHECK_THROWS_AS(perimeter_laplace(0, 1, 1000, 1, 1), std::invalid_argument);
  const LaplaceEstimate a = perimeter_laplace(1, 4, 1000, 2, 8);
  const LaplaceEstimate b = perimeter_laplace(4, 1, 1000, 2, 8);
  CHECK(a.closed_form == doctest::Approx(std::sqrt(2.0) / 3));
  CHECK(a.standard_error > 0);
  const double sigma = std::sqrt(a.standard_error * a.standard_error + b.standard_error * b.standard_error);
  CHECK(std::abs(a.estimate - b.estimate) < 2 * sigma);
  const LaplaceEstimate s = perimeter_laplace_serial(1, 4, 1000, 2, 8);
  CHECK(s.estimate == a.estimate);
  CHECK(s.standard_error == a.standard_error);
  CHECK(perimeter_laplace_deterministic(1, 1, 1000) > 0);
}
