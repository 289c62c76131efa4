#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gen.hpp"
#include "hurwitz/branching_graph.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_count.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/trivalent.hpp"
#include "hurwitz/wick.hpp"

using namespace hurwitz;

namespace {

// All fixed-point-free involutions on n points.
void for_each_pairing(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(static_cast<std::size_t>(n), -1);
  std::function<void()> rec = [&] {
    int i = 0;
    while (i < n && a[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == n) {
      f(a);
      return;
    }
    for (int j = i + 1; j < n; ++j) {
      if (a[static_cast<std::size_t>(j)] >= 0) continue;
      a[static_cast<std::size_t>(i)] = j;
      a[static_cast<std::size_t>(j)] = i;
      rec();
      a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(j)] = -1;
    }
  };
  rec();
}

// Face index of every dart under d -> sigma[alpha[d]], and the face count.
std::pair<std::vector<int>, int> face_index(const std::vector<int>& sigma, const std::vector<int>& alpha) {
  std::vector<int> f(sigma.size(), -1);
  int faces = 0;
  for (std::size_t d = 0; d < sigma.size(); ++d) {
    if (f[d] >= 0) continue;
    for (std::size_t e = d; f[e] < 0; e = static_cast<std::size_t>(sigma[static_cast<std::size_t>(alpha[e])])) f[e] = faces;
    ++faces;
  }
  return {f, faces};
}

bool connected_vertices(int vertices, const std::vector<int>& alpha) {
  std::vector<int> up(static_cast<std::size_t>(vertices));
  std::iota(up.begin(), up.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return up[static_cast<std::size_t>(x)] == x ? x : up[static_cast<std::size_t>(x)] = find(up[static_cast<std::size_t>(x)]);
  };
  for (std::size_t d = 0; d < alpha.size(); ++d)
    up[static_cast<std::size_t>(find(static_cast<int>(d) / 3))] = find(alpha[d] / 3);
  for (int v = 1; v < vertices; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

// (1/(3^V V!)) * sum over every pairing and every face labeling of the
// edge weight: the automorphism-weighted class sum by orbit counting.
Rat brute_weighted_sum(int g, int n, const std::vector<Rat>& s) {
  const int v = 2 * (2 * g - 2 + n);
  const std::vector<int> sigma = trivalent_rotation(v);
  Rat total(0);
  for_each_pairing(3 * v, [&](const std::vector<int>& alpha) {
    if (!connected_vertices(v, alpha)) return;
    auto [f, faces] = face_index(sigma, alpha);
    if (faces != n || v - 3 * v / 2 + faces != 2 - 2 * g) return;
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    do {
      Rat w(1);
      for (std::size_t d = 0; d < alpha.size(); ++d)
        if (static_cast<int>(d) < alpha[d])
          w /= s[static_cast<std::size_t>(labels[static_cast<std::size_t>(f[d])])] +
               s[static_cast<std::size_t>(labels[static_cast<std::size_t>(f[static_cast<std::size_t>(alpha[d])])])];
      total += w;
    } while (std::next_permutation(labels.begin(), labels.end()));
  });
  return total / Rat(ipow(BigInt(3), static_cast<unsigned long>(v)) * factorial(static_cast<unsigned long>(v)));
}

// <prod tr M^{k_i}> at a fixed N by summing over pairings of matrix entries
// and over all index assignments.
long brute_moment(const std::vector<int>& ks, int n) {
  std::vector<std::pair<int, int>> entries;  // index slots (row, col) of each factor
  int slots = 0;
  for (int k : ks) {
    for (int j = 0; j < k; ++j) entries.emplace_back(slots + j, slots + (j + 1) % k);
    slots += k;
  }
  const int m = static_cast<int>(entries.size());
  if (m % 2) return 0;
  long total = 0;
  for_each_pairing(m, [&](const std::vector<int>& pair) {
    std::vector<int> idx(static_cast<std::size_t>(slots), 0);
    while (true) {
      bool ok = true;
      for (int a = 0; a < m && ok; ++a) {
        const int b = pair[static_cast<std::size_t>(a)];
        const auto [i, j] = entries[static_cast<std::size_t>(a)];
        const auto [k, l] = entries[static_cast<std::size_t>(b)];
        ok = idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(l)] &&
             idx[static_cast<std::size_t>(j)] == idx[static_cast<std::size_t>(k)];
      }
      if (ok) ++total;
      std::size_t t = 0;
      while (t < idx.size() && ++idx[t] == n) idx[t++] = 0;
      if (t == idx.size()) break;
    }
  });
  return total;
}

RibbonMap random_trivalent(Gen& gen, int v) {
  RibbonMap m;
  m.sigma = trivalent_rotation(v);
  auto order = gen.permutation(3 * v);
  m.alpha.assign(static_cast<std::size_t>(3 * v), 0);
  for (int i = 0; i < 3 * v; i += 2) {
    m.alpha[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = order[static_cast<std::size_t>(i + 1)];
    m.alpha[static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])] = order[static_cast<std::size_t>(i)];
  }
  return m.with_default_face_labels();
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  Gen gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const RibbonMap m = random_trivalent(gen, 2 * gen.integer(1, 3));
    m.validate();
    if (!m.connected()) continue;
    const auto c = canonical_form(m);
    const auto perm = gen.permutation(m.darts());
    const RibbonMap r = m.relabeled(perm);
    r.validate();
    const auto cr = canonical_form(r);
    CHECK(c.code == cr.code);
    CHECK(c.aut_order == cr.aut_order);
    CHECK(r.genus() == m.genus());
    CHECK(r.faces() == m.faces());
  }
}

TEST_CASE("validation rejects malformed maps") {
  RibbonMap m;
  m.sigma = {1, 0};
  m.alpha = {0, 1};
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m.alpha = {1, 0};
  m.face_label = {0, 1};
  m.validate();
  CHECK(m.faces() == 2);
  m.face_label = {0, 1, 2};
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}

TEST_CASE("trivalent classes satisfy the Euler relation") {
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
    const auto classes = enumerate_trivalent(g, n);
    CHECK_FALSE(classes.empty());
    for (const auto& c : classes) {
      CHECK(c.genus == g);
      CHECK(c.cells == n);
      CHECK(c.rep.vertices() == 2 * (2 * g - 2 + n));
      CHECK(c.rep.euler_characteristic() == 2 - 2 * g);
      CHECK(c.rep.connected());
    }
  }
}

TEST_CASE("serial and parallel trivalent enumeration agree") {
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}})
    CHECK(enumerate_trivalent(g, n) == enumerate_trivalent_serial(g, n));
}

TEST_CASE("automorphism-weighted class sums match orbit counting over all pairings") {
  Gen gen(42);
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
    std::vector<Rat> s;
    for (int i = 0; i < n; ++i) s.push_back(gen.positive_rational());
    Rat classes_sum(0), classes_count(0);
    for (const auto& c : enumerate_trivalent(g, n)) {
      classes_sum += edge_weight(c.rep, s) / Rat(c.aut_order);
      classes_count += Rat(1, c.aut_order);
    }
    CAPTURE(g);
    CAPTURE(n);
    CHECK(classes_sum == brute_weighted_sum(g, n, s));
    CHECK(classes_count == brute_weighted_sum(g, n, std::vector<Rat>(static_cast<std::size_t>(n), Rat(1, 2))));
  }
}

TEST_CASE("Kontsevich sum equals the series") {
  CHECK(kontsevich_sum(1, {Rat(1)}) == Rat(1, 24));
  CHECK(kontsevich_sum(1, {Rat(2)}) == Rat(1, 192));
  CHECK(kontsevich_sum(0, {Rat(1), Rat(1), Rat(1)}) == Rat(1));
  CHECK(kontsevich_sum(0, {Rat(1), Rat(2), Rat(3)}) == Rat(1, 6));
  Gen gen(43);
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}})
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rat> s;
      for (int i = 0; i < n; ++i) s.push_back(gen.positive_rational());
      CHECK(kontsevich_sum(g, s) == kontsevich_series_eval(g, s));
    }
}

TEST_CASE("trivalent enumeration respects the budget") {
  Budget b;
  b.trivalent_max_vertices = 2;
  CHECK_THROWS_AS(enumerate_trivalent(0, 4, b), BudgetExceeded);
}

TEST_CASE("branching graphs of small tuples") {
  const BranchingGraph point = branching_graph_from_tuple(TranspositionTuple{1, {}});
  CHECK(point.map.darts() == 0);
  CHECK(point.cells() == 1);
  CHECK(point.perimeters == std::vector<Rat>{Rat(1)});

  const BranchingGraph tree = branching_graph_from_tuple(TranspositionTuple{3, {{0, 1}, {0, 2}}});
  CHECK(tree.genus == 0);
  CHECK(tree.cells() == 1);
  CHECK(tree.profile() == Partition{3});
  CHECK_THROWS_AS(homotopy_type(tree), UnstableResult);

  const BranchingGraph doubled = branching_graph_from_tuple(TranspositionTuple{2, {{0, 1}, {0, 1}}});
  CHECK(doubled.genus == 0);
  CHECK(doubled.cells() == 2);
  CHECK(doubled.profile() == Partition{1, 1});
  CHECK(branching_canonical_form(doubled).aut_order == 2);

  CHECK_THROWS_AS(branching_graph_from_tuple(TranspositionTuple{3, {{0, 1}, {0, 1}}}), NotTransitive);
}

TEST_CASE("branching graph corners sum to the perimeters") {
  for (const auto& [g, mu] : std::vector<std::pair<int, Partition>>{{0, {2, 1}}, {1, {2, 1}}, {0, {3, 1}}, {1, {3}}, {2, {2}}})
    for (const auto& t : list_monodromy_tuples(g, mu)) {
      const BranchingGraph h = branching_graph_from_tuple(t);
      CHECK(h.genus == g);
      CHECK(h.profile() == mu);
      CHECK(h.map.edges() == ram_count(g, mu));
      Rat total(0);
      for (int d = 0; d < h.map.darts(); ++d) total += h.corner_angle(d);
      Rat per(0);
      for (const auto& p : h.perimeters) per += p;
      CHECK(total == per);
    }
}

TEST_CASE("distinct branching graphs weighted by automorphisms give the Hurwitz number") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : partitions_of(d))
      for (int g = 0; g <= 1; ++g) {
        if (ram_count_unchecked(g, mu) > 7) continue;
        std::map<std::vector<int>, long> seen;
        for (const auto& t : list_monodromy_tuples(g, mu)) {
          const auto c = branching_canonical_form(branching_graph_from_tuple(t));
          seen.emplace(c.code, c.aut_order);
        }
        Rat sum(0);
        for (const auto& [code, aut] : seen) sum += Rat(1, aut);
        CAPTURE(g);
        CAPTURE(mu.str());
        CHECK(sum == hurwitz_monodromy(g, mu));
      }
}

TEST_CASE("homotopy type of a genus-one one-cell graph") {
  const BranchingGraph h = branching_graph_from_tuple(TranspositionTuple{2, {{0, 1}, {0, 1}, {0, 1}}});
  CHECK(h.genus == 1);
  CHECK(h.cells() == 1);
  const MapClass c = homotopy_type(h);
  CHECK(c.genus == 1);
  CHECK(c.cells == 1);
  for (const auto& cyc : c.rep.vertex_cycles()) CHECK(cyc.size() >= 3);
  const auto triv = enumerate_trivalent(1, 1);
  CHECK(std::find(triv.begin(), triv.end(), c) != triv.end());
}

TEST_CASE("homotopy types keep genus and cell count") {
  for (const auto& [g, mu] : std::vector<std::pair<int, Partition>>{{1, {2, 1}}, {0, {3, 2, 1}}, {1, {3}}}) {
    const auto tuples = list_monodromy_tuples(g, mu);
    const std::size_t stride = std::max<std::size_t>(1, tuples.size() / 300);
    for (std::size_t i = 0; i < tuples.size(); i += stride) {
      const MapClass c = homotopy_type(branching_graph_from_tuple(tuples[i]));
      CHECK(c.genus == g);
      CHECK(c.cells == mu.length());
      for (const auto& cyc : c.rep.vertex_cycles()) CHECK(cyc.size() >= 3);
    }
  }
}

TEST_CASE("Gaussian moments") {
  CHECK(wick_moment({4}).str() == "2N^3 + N");
  CHECK(wick_moment({2, 2}).str() == "N^4 + 2N^2");
  CHECK(wick_moment({3}) == Polynomial{});
  CHECK(wick_moment({2}).str() == "N^2");
  for (const auto& ks : std::vector<std::vector<int>>{{2}, {4}, {1, 1}, {2, 2}, {3, 1}, {1, 1, 2}, {6}, {3, 3}, {4, 2}})
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(wick_moment(ks).eval(BigInt(n)) == brute_moment(ks, n));
    }
  Budget b;
  b.wick_max_sides = 4;
  CHECK_THROWS_AS(wick_moment({6}, b), BudgetExceeded);
}
