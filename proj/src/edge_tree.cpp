#include "hurwitz/edge_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

void EdgeTree::validate() const {
  if (n < 2) throw std::invalid_argument("edge tree needs at least two vertices");
  if (static_cast<int>(edges.size()) != n - 1) throw std::invalid_argument("edge tree needs n-1 edges");
  if (root == top || root < 0 || top < 0 || root >= n || top >= n)
    throw std::invalid_argument("edge tree needs distinct root and top");
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("bad edge endpoint");
    const int a = find(u), b = find(v);
    if (a == b) throw std::invalid_argument("edges contain a cycle");
    parent[static_cast<std::size_t>(a)] = b;
  }
}

std::vector<std::vector<int>> EdgeTree::incidence() const {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(n));
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    inc[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)].first)].push_back(k);
    inc[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)].second)].push_back(k);
  }
  return inc;
}

std::vector<std::pair<int, int>> pruefer_decode(int n, const std::vector<int>& code) {
  if (n < 2 || static_cast<int>(code.size()) != n - 2) throw std::invalid_argument("Pruefer code has wrong length");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) {
    if (c < 0 || c >= n) throw std::invalid_argument("Pruefer code entry out of range");
    ++degree[static_cast<std::size_t>(c)];
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  int ptr = 0;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int c : code) {
    edges.emplace_back(leaf, c);
    if (--degree[static_cast<std::size_t>(c)] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
    degree[static_cast<std::size_t>(edges.back().first)] = 0;
  }
  for (int v = 0; v < n; ++v)
    if (v != leaf && degree[static_cast<std::size_t>(v)] == 1) {
      edges.emplace_back(leaf, v);
      break;
    }
  return edges;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return std::mt19937_64(z);
}

EdgeTree sample_edge_tree(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("edge tree needs at least two vertices");
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = vertex(rng);
  EdgeTree t;
  t.n = n;
  t.edges = pruefer_decode(n, code);
  t.root = vertex(rng);
  std::uniform_int_distribution<int> other(0, n - 2);
  t.top = other(rng);
  if (t.top >= t.root) ++t.top;
  std::shuffle(t.edges.begin(), t.edges.end(), rng);
  return t;
}

EdgeTree sample_edge_tree(int n, std::uint64_t seed) {
  auto rng = sample_rng(seed, 0);
  return sample_edge_tree(n, rng);
}

namespace {

// Flat incidence lists, each sorted by label (edge index). Dart 2e + s is
// edge e seen from endpoint s (0: first, 1: second); ring_pos[dart] is its
// slot in that endpoint's list.
struct Incidence {
  std::vector<int> offset;    // n + 1
  std::vector<int> ring;      // darts
  std::vector<int> ring_pos;  // per dart

  explicit Incidence(const EdgeTree& t) {
    const std::size_t n = static_cast<std::size_t>(t.n);
    offset.assign(n + 1, 0);
    for (const auto& [a, b] : t.edges) {
      ++offset[static_cast<std::size_t>(a) + 1];
      ++offset[static_cast<std::size_t>(b) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
    ring.assign(2 * t.edges.size(), 0);
    ring_pos.assign(2 * t.edges.size(), 0);
    std::vector<int> fill(offset.begin(), offset.end() - 1);
    for (std::size_t e = 0; e < t.edges.size(); ++e)
      for (int s = 0; s < 2; ++s) {
        const int v = s == 0 ? t.edges[e].first : t.edges[e].second;
        const int slot = fill[static_cast<std::size_t>(v)]++;
        const int dart = static_cast<int>(2 * e) + s;
        ring[static_cast<std::size_t>(slot)] = dart;
        ring_pos[static_cast<std::size_t>(dart)] = slot;
      }
  }
  int degree(int v) const { return offset[static_cast<std::size_t>(v) + 1] - offset[static_cast<std::size_t>(v)]; }
  // Next dart after d around d's endpoint, by increasing label (cyclic).
  int succ(int d, int v) const {
    int slot = ring_pos[static_cast<std::size_t>(d)] + 1;
    if (slot == offset[static_cast<std::size_t>(v) + 1]) slot = offset[static_cast<std::size_t>(v)];
    return ring[static_cast<std::size_t>(slot)];
  }
};

int dart_vertex(const EdgeTree& t, int d) {
  const auto& e = t.edges[static_cast<std::size_t>(d / 2)];
  return d % 2 == 0 ? e.first : e.second;
}

// Root-to-top vertex path plus parent darts from a search rooted at root.
std::vector<int> path_from(const EdgeTree& t, const Incidence& inc) {
  std::vector<int> parent(static_cast<std::size_t>(t.n), -1);
  std::vector<int> queue{t.root};
  queue.reserve(static_cast<std::size_t>(t.n));
  parent[static_cast<std::size_t>(t.root)] = t.root;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    if (v == t.top) break;
    for (int k = inc.offset[static_cast<std::size_t>(v)]; k < inc.offset[static_cast<std::size_t>(v) + 1]; ++k) {
      const int w = dart_vertex(t, inc.ring[static_cast<std::size_t>(k)] ^ 1);
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = t.top; v != t.root; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  path.push_back(t.root);
  std::reverse(path.begin(), path.end());
  return path;
}

int component_size(const EdgeTree& t, const Incidence& inc, int blocked) {
  std::vector<char> seen(static_cast<std::size_t>(t.n), 0);
  std::vector<int> stack{t.root};
  seen[static_cast<std::size_t>(t.root)] = 1;
  int count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int k = inc.offset[static_cast<std::size_t>(v)]; k < inc.offset[static_cast<std::size_t>(v) + 1]; ++k) {
      const int w = dart_vertex(t, inc.ring[static_cast<std::size_t>(k)] ^ 1);
      if (seen[static_cast<std::size_t>(w)] || (v == t.root && w == blocked)) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  return count;
}

}  // namespace

std::vector<int> trunk_path(const EdgeTree& t) { return path_from(t, Incidence(t)); }

int trunk_length(const EdgeTree& t) { return static_cast<int>(trunk_path(t).size()); }

int root_component_size(const EdgeTree& t) {
  const Incidence inc(t);
  return component_size(t, inc, path_from(t, inc)[1]);
}

int valence(const EdgeTree& t, int v) {
  int k = 0;
  for (const auto& [a, b] : t.edges) k += (a == v) + (b == v);
  return k;
}

namespace {

SemiperimeterPair walk(const EdgeTree& t, const Incidence& inc, const std::vector<int>& path,
                       const std::vector<int>& lab, long modulus) {
  const int n = t.n;
  // Dart of the edge from u towards v, seen from u.
  auto dart_between = [&](int u, int v) {
    for (int k = inc.offset[static_cast<std::size_t>(u)]; k < inc.offset[static_cast<std::size_t>(u) + 1]; ++k) {
      const int d = inc.ring[static_cast<std::size_t>(k)];
      if (dart_vertex(t, d ^ 1) == v) return d;
    }
    throw std::logic_error("trunk vertices not adjacent");
  };
  // Darts entering the root along e_r and the top along e_t.
  const int into_root = dart_between(path[0], path[1]);
  const int into_top = dart_between(path[path.size() - 1], path[path.size() - 2]);

  auto angle = [&](int e, int e2) {
    long diff = (lab[static_cast<std::size_t>(e2)] - lab[static_cast<std::size_t>(e)]) % modulus;
    if (diff <= 0) diff += modulus;
    return diff;
  };

  // The walk follows darts "arriving at" their endpoint: from arriving dart
  // d, the next edge leaves d's endpoint as succ(d) and arrives at the far
  // end. Start right after e_r enters the root.
  const std::size_t len = static_cast<std::size_t>(2 * n - 2);
  std::vector<int> seq(len);
  int d = inc.succ(into_root, t.root) ^ 1;
  for (std::size_t k = 0; k < len; ++k) {
    seq[k] = d;
    d = inc.succ(d, dart_vertex(t, d)) ^ 1;
  }
  if (seq[len - 1] != into_root) throw std::logic_error("boundary walk did not close");
  std::size_t ic = len;
  for (std::size_t k = 0; k < len; ++k)
    if (seq[k] == into_top) {
      ic = k;
      break;
    }
  if (ic == len) throw std::logic_error("boundary walk missed the top");

  long pr = 0, pt = 0;
  for (std::size_t k = 0; k + 1 <= ic; ++k) pr += angle(seq[k] / 2, seq[k + 1] / 2);
  for (std::size_t k = ic + 1; k + 1 < len; ++k) pt += angle(seq[k] / 2, seq[k + 1] / 2);

  SemiperimeterPair out{Rat(pr, modulus), Rat(pt, modulus), 0};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(t.root)] = 1;
  int order = 1;
  for (std::size_t k = 0; k < len && out.top_position == 0; ++k) {
    const int v = dart_vertex(t, seq[k]);
    if (seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = 1;
    ++order;
    if (v == t.top) out.top_position = order;
  }
  return out;
}

SemiperimeterPair walk(const EdgeTree& t, const std::vector<int>& lab, long modulus) {
  const Incidence inc(t);
  return walk(t, inc, path_from(t, inc), lab, modulus);
}

std::vector<int> identity_labels(const EdgeTree& t) {
  std::vector<int> lab(t.edges.size());
  std::iota(lab.begin(), lab.end(), 1);
  return lab;
}

}  // namespace

TreeSummary summarize(const EdgeTree& t) {
  const Incidence inc(t);
  const auto path = path_from(t, inc);
  TreeSummary s;
  s.trunk = static_cast<int>(path.size());
  s.root_component = component_size(t, inc, path[1]);
  s.root_valence = inc.degree(t.root);
  s.semiperimeters = walk(t, inc, path, identity_labels(t), t.n - 1);
  return s;
}

SemiperimeterPair semiperimeters(const EdgeTree& t) { return walk(t, identity_labels(t), t.n - 1); }

SemiperimeterPair semiperimeters(const EdgeTree& t, const std::vector<int>& relabel, int modulus) {
  if (relabel.size() != t.edges.size()) throw std::invalid_argument("relabeling has wrong size");
  for (std::size_t i = 0; i + 1 < relabel.size(); ++i)
    if (relabel[i] >= relabel[i + 1]) throw std::invalid_argument("relabeling must be increasing");
  if (!relabel.empty() && (relabel.front() < 1 || relabel.back() > modulus))
    throw std::invalid_argument("relabeling out of range");
  return walk(t, relabel, modulus);
}

}  // namespace hurwitz
