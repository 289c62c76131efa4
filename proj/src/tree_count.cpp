#include "hurwitz/tree_count.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hurwitz/intersection.hpp"

namespace hurwitz {

std::string to_string(TreeClass c) {
  switch (c) {
    case TreeClass::T: return "T";
    case TreeClass::V: return "V";
    case TreeClass::E: return "E";
    case TreeClass::V1: return "V1";
    case TreeClass::E1: return "E1";
    case TreeClass::V11: return "V11";
    case TreeClass::E11: return "E11";
    case TreeClass::V2: return "V2";
    case TreeClass::E2: return "E2";
  }
  return "?";
}

std::vector<TreeClass> all_tree_classes() {
  return {TreeClass::T,  TreeClass::V,   TreeClass::E,   TreeClass::V1, TreeClass::E1,
          TreeClass::V11, TreeClass::E11, TreeClass::V2, TreeClass::E2};
}

TreeClass parse_tree_class(const std::string& s) {
  for (auto c : all_tree_classes())
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown tree class '" + s + "'");
}

Rat count_trees(TreeClass c, int n) {
  if (n < 1) throw std::invalid_argument("tree count needs n >= 1");
  const Rat nn(n);
  switch (c) {
    case TreeClass::T: return pow(nn, n - 2) / Rat(factorial(static_cast<unsigned long>(n)));
    case TreeClass::V: return pow(nn, n - 2);
    case TreeClass::E: return n == 2 ? Rat(1, 2) : pow(nn, n - 3);
    case TreeClass::V1: return pow(nn, n - 1);
    case TreeClass::E1: return pow(nn, n - 2);
    case TreeClass::V11: return Rat(n - 1) * pow(nn, n - 1);
    case TreeClass::E11: return Rat(n - 1) * pow(nn, n - 2);
    case TreeClass::V2: return pow(nn, n);
    case TreeClass::E2: return pow(nn, n - 1);
  }
  return Rat(0);
}

std::vector<std::vector<std::pair<int, int>>> labeled_trees(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("labeled tree enumeration supports 1 <= n <= 8");
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> pick;
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == n - 1) {
      std::iota(comp.begin(), comp.end(), 0);
      for (const auto& [a, b] : pick) {
        const int ca = comp[static_cast<std::size_t>(a)], cb = comp[static_cast<std::size_t>(b)];
        if (ca == cb) return;
        for (auto& c : comp)
          if (c == cb) c = ca;
      }
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < all.size(); ++i) {
      pick.push_back(all[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)])
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// Isomorphism invariant of an unlabeled tree: least rooted code over roots.
std::string tree_code(int n, const std::vector<std::pair<int, int>>& edges) {
  const auto adj = adjacency(n, edges);
  std::string best;
  for (int r = 0; r < n; ++r) {
    auto c = rooted_code(adj, r, -1);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

long automorphisms(int n, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> es;
  for (auto [a, b] : edges) es.insert({std::min(a, b), std::max(a, b)});
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (auto [a, b] : edges) {
      const int x = p[static_cast<std::size_t>(a)], y = p[static_cast<std::size_t>(b)];
      if (!es.count({std::min(x, y), std::max(x, y)})) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// One representative edge list per unlabeled tree on n vertices.
std::vector<std::vector<std::pair<int, int>>> unlabeled_trees(int n) {
  std::map<std::string, std::vector<std::pair<int, int>>> reps;
  for (auto& t : labeled_trees(n)) reps.emplace(tree_code(n, t), t);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (auto& [code, t] : reps) out.push_back(t);
  return out;
}

enum Marks { none, rooted, root_top_distinct, root_top_any };

std::vector<std::pair<int, int>> mark_choices(int n, Marks m) {
  std::vector<std::pair<int, int>> out;
  switch (m) {
    case none: out.emplace_back(-1, -1); break;
    case rooted:
      for (int r = 0; r < n; ++r) out.emplace_back(r, -1);
      break;
    case root_top_distinct:
    case root_top_any:
      for (int r = 0; r < n; ++r)
        for (int t = 0; t < n; ++t)
          if (r != t || m == root_top_any) out.emplace_back(r, t);
      break;
  }
  return out;
}

Marks marks_of(TreeClass c) {
  switch (c) {
    case TreeClass::T: case TreeClass::V: case TreeClass::E: return none;
    case TreeClass::V1: case TreeClass::E1: return rooted;
    case TreeClass::V11: case TreeClass::E11: return root_top_distinct;
    case TreeClass::V2: case TreeClass::E2: return root_top_any;
  }
  return none;
}

// Edge-marked trees: each vertex is described by its incident labels and
// marks; the sorted list of descriptions determines the tree.
Rat edge_marked_count(int n, Marks m) {
  using Vertex = std::pair<std::vector<int>, int>;
  Rat total(0);
  for (const auto& t : unlabeled_trees(n)) {
    std::set<std::vector<Vertex>> seen;
    std::vector<int> labels(t.size());
    std::iota(labels.begin(), labels.end(), 1);
    do {
      for (auto [r, tp] : mark_choices(n, m)) {
        std::vector<Vertex> key(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < t.size(); ++k) {
          key[static_cast<std::size_t>(t[k].first)].first.push_back(labels[k]);
          key[static_cast<std::size_t>(t[k].second)].first.push_back(labels[k]);
        }
        for (int v = 0; v < n; ++v) {
          auto& vx = key[static_cast<std::size_t>(v)];
          std::sort(vx.first.begin(), vx.first.end());
          vx.second = (v == r ? 1 : 0) + (v == tp ? 2 : 0);
        }
        std::sort(key.begin(), key.end());
        seen.insert(std::move(key));
      }
    } while (std::next_permutation(labels.begin(), labels.end()));
    for (const auto& key : seen) {
      BigInt aut = 1;
      for (std::size_t i = 0; i < key.size();) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        aut *= factorial(static_cast<unsigned long>(j - i));
        i = j;
      }
      total += Rat(BigInt(1), aut);
    }
  }
  return total;
}

}  // namespace

Rat brute_force_tree_count(TreeClass c, int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("brute-force tree count supports 1 <= n <= 7");
  switch (c) {
    case TreeClass::T: {
      Rat total(0);
      for (const auto& t : unlabeled_trees(n)) total += Rat(1, automorphisms(n, t));
      return total;
    }
    case TreeClass::V: case TreeClass::V1: case TreeClass::V11: case TreeClass::V2: {
      const long marks = static_cast<long>(mark_choices(n, marks_of(c)).size());
      return Rat(marks * static_cast<long>(labeled_trees(n).size()));
    }
    default:
      return edge_marked_count(n, marks_of(c));
  }
}

BigInt forest_count(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("forest count needs 1 <= k <= n");
  const Rat v = Rat(BigInt(k) * binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) *
                pow(Rat(n), n - k - 1);
  if (!v.is_integer()) throw std::logic_error("forest count not integral");
  return v.num();
}

BigInt brute_force_forest_count(int n, int k) {
  if (k < 1 || k > n || n > 7) throw std::invalid_argument("brute-force forest count needs 1 <= k <= n <= 7");
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  BigInt total = 0;
  const unsigned long subsets = 1UL << all.size();
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    if (__builtin_popcountl(mask) != n - k) continue;
    std::vector<int> comp(static_cast<std::size_t>(n));
    std::iota(comp.begin(), comp.end(), 0);
    bool acyclic = true;
    for (std::size_t i = 0; i < all.size() && acyclic; ++i) {
      if (!((mask >> i) & 1)) continue;
      const int ca = comp[static_cast<std::size_t>(all[i].first)], cb = comp[static_cast<std::size_t>(all[i].second)];
      if (ca == cb) acyclic = false;
      for (auto& c : comp)
        if (c == cb) c = ca;
    }
    if (!acyclic) continue;
    std::map<int, long> sizes;
    for (int c : comp) ++sizes[c];
    BigInt roots = 1;
    for (const auto& [c, s] : sizes) roots *= s;
    total += roots;
  }
  return total;
}

std::map<std::vector<int>, BigInt> cayley_tree_side(int n) {
  std::map<std::vector<int>, BigInt> out;
  for (const auto& t : labeled_trees(n)) {
    std::vector<int> val(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : t) {
      ++val[static_cast<std::size_t>(a)];
      ++val[static_cast<std::size_t>(b)];
    }
    out[val] += 1;
  }
  return out;
}

std::map<std::vector<int>, BigInt> cayley_polynomial_side(int n) {
  std::map<std::vector<int>, BigInt> out;
  if (n == 1) {
    out[{0}] = 1;
    return out;
  }
  // z_1 ... z_n times the multinomial expansion of (z_1 + ... + z_n)^(n-2).
  for (const auto& e : compositions(n - 2, n)) {
    BigInt c = factorial(static_cast<unsigned long>(n - 2));
    std::vector<int> val(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      c /= factorial(static_cast<unsigned long>(e[static_cast<std::size_t>(i)]));
      val[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] + 1;
    }
    out[val] += c;
  }
  return out;
}

}  // namespace hurwitz
