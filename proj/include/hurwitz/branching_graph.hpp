#pragma once

#include <vector>

#include "hurwitz/hurwitz_count.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/ribbon_map.hpp"

namespace hurwitz {

// Graph of a transposition tuple: vertices are sheets, edge k joins the two
// sheets swapped by the k-th transposition and carries label k (1-based,
// standing for the root of unity exp(2 pi i k / r)). Around each vertex the
// rotation visits incident edges by increasing label.
struct BranchingGraph {
  int degree = 0;
  int r = 0;
  RibbonMap map;                   // darts 2k-2 and 2k-1 belong to edge k
  std::vector<int> dart_vertex;    // sheet of each dart
  std::vector<int> edge_label;     // label of each dart's edge, 1..r
  std::vector<Rat> perimeters;     // one per cell, in face-cycle order
  int genus = 0;

  int cells() const;
  // Angle of the corner from dart d to sigma(d): ((label(sigma d) - label(d)) mod r in (0, r]) / r.
  Rat corner_angle(int d) const;
  // Perimeters as a partition (all perimeters are integers).
  Partition profile() const;
};

// Throws NotTransitive, PerimeterMismatch.
BranchingGraph branching_graph_from_tuple(const TranspositionTuple& tuple);

// Label-preserving automorphism count (1 or 2) and canonical code of the
// underlying labeled graph.
CanonicalForm branching_canonical_form(const BranchingGraph& h);

// Strip univalent vertices, smooth bivalent ones, label the cells by the
// position of their perimeter in the (distinct-part) profile, and classify.
// Throws UnstableResult if 2g-2+n <= 0.
MapClass homotopy_type(const BranchingGraph& h);

}  // namespace hurwitz
