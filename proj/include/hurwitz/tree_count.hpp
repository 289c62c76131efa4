#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// T: unlabeled trees (each weighted by 1/|Aut|); V/E: vertex/edge marked;
// suffix 1: rooted; 11: distinct root and top; 2: root and top may coincide.
enum class TreeClass { T, V, E, V1, E1, V11, E11, V2, E2 };
std::string to_string(TreeClass c);
TreeClass parse_tree_class(const std::string& s);
std::vector<TreeClass> all_tree_classes();

// Closed forms, with |E(2)| = 1/2.
Rat count_trees(TreeClass c, int n);
// Exhaustive enumeration of the class (n <= 7), automorphism weighted.
Rat brute_force_tree_count(TreeClass c, int n);

// Rooted forests on n labeled vertices with k trees: k C(n,k) n^(n-k-1).
BigInt forest_count(int n, int k);
// Acyclic edge sets of K_n with n-k edges, times the product of component
// sizes (root choices).
BigInt brute_force_forest_count(int n, int k);

// All labeled trees on {0..n-1} as edge lists (n <= 8).
std::vector<std::vector<std::pair<int, int>>> labeled_trees(int n);

// Valence-sequence expansion of the left side of Cayley's identity,
// sum over trees of prod z_i^{val(i)}, and the coefficients of
// z_1 ... z_n (z_1 + ... + z_n)^(n-2).
std::map<std::vector<int>, BigInt> cayley_tree_side(int n);
std::map<std::vector<int>, BigInt> cayley_polynomial_side(int n);

}  // namespace hurwitz
