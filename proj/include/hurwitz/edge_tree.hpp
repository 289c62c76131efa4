#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Edge tree: n vertices, edge k (0-based) joins edges[k] and carries label
// k + 1. Vertex ids are internal bookkeeping only; every statistic below is
// invariant under renaming them.
struct EdgeTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int root = 0;
  int top = 1;

  // Throws std::invalid_argument unless this is a tree with root != top.
  void validate() const;
  // Incident edge indices per vertex, sorted by label.
  std::vector<std::vector<int>> incidence() const;
  int other_end(int edge, int v) const {
    const auto& e = edges[static_cast<std::size_t>(edge)];
    return e.first == v ? e.second : e.first;
  }
};

// Vertex-labeled tree from a Pruefer code of length n-2 over {0..n-1}
// (linear-time decoding).
std::vector<std::pair<int, int>> pruefer_decode(int n, const std::vector<int>& code);

// Per-sample generator: mt19937_64 seeded from (seed, index) through
// splitmix64, so results do not depend on how samples are split over threads.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

// Uniform element of E11(n): uniform Pruefer code, uniform ordered pair of
// distinct (root, top), uniform edge labeling.
EdgeTree sample_edge_tree(int n, std::mt19937_64& rng);
EdgeTree sample_edge_tree(int n, std::uint64_t seed);

// Vertices of the root-to-top path, root first.
std::vector<int> trunk_path(const EdgeTree& t);
// Number of vertices on the trunk.
int trunk_length(const EdgeTree& t);
// Vertices on the root's side of the trunk edge at the root.
int root_component_size(const EdgeTree& t);
int valence(const EdgeTree& t, int v);

struct SemiperimeterPair {
  Rat root;  // P_R
  Rat top;   // P_T
  // Position (1-based) of the top vertex in order of first appearance
  // along the root path followed by the top path.
  int top_position = 0;
};

// Boundary walk of the planar embedding in which edges around a vertex
// follow increasing labels. Angles are ((l' - l) mod m in (0, m]) / m with
// m = n - 1, or, when relabel is given, l -> relabel[l - 1] and m = modulus.
SemiperimeterPair semiperimeters(const EdgeTree& t);
SemiperimeterPair semiperimeters(const EdgeTree& t, const std::vector<int>& relabel, int modulus);

// Everything the statistics need from one tree, sharing a single
// incidence structure and trunk search.
struct TreeSummary {
  int trunk = 0;
  int root_component = 0;
  int root_valence = 0;
  SemiperimeterPair semiperimeters;
};
TreeSummary summarize(const EdgeTree& t);

}  // namespace hurwitz
