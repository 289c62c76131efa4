#pragma once

#include <vector>

#include "hurwitz/budget.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/ribbon_map.hpp"

namespace hurwitz {

// Darts 3i, 3i+1, 3i+2 form vertex i; sigma is the product of these 3-cycles.
std::vector<int> trivalent_rotation(int vertices);

// Connected fixed-point-free involutions on the darts of trivalent_rotation(V),
// generated so that vertices are reached in increasing order (each unlabeled
// map appears at least once). Serial.
std::vector<std::vector<int>> connected_trivalent_pairings(int vertices);

// Isomorphism classes of connected trivalent maps of genus g with n labeled
// cells, with automorphism orders. Sorted by canonical code.
std::vector<MapClass> enumerate_trivalent(int g, int n, const Budget& budget = Budget::from_env());
// Single-threaded reference for the same list.
std::vector<MapClass> enumerate_trivalent_serial(int g, int n, const Budget& budget = Budget::from_env());

// Product over edges of 1/(s_i + s_j), i and j the labels of the cells on
// either side of the edge.
Rat edge_weight(const RibbonMap& m, const std::vector<Rat>& s);

// Sum over trivalent classes of 2^(2g-2+n)/|Aut| * edge_weight.
Rat kontsevich_sum(int g, const std::vector<Rat>& s, const Budget& budget = Budget::from_env());
Rat kontsevich_sum(const std::vector<MapClass>& classes, int g, const std::vector<Rat>& s);

}  // namespace hurwitz
