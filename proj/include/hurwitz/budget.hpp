#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hurwitz {

// Enumeration caps. Every brute-force kernel checks its cap before starting
// and throws BudgetExceeded instead of running away.
struct Budget {
  int monodromy_max_degree = 6;
  // Hard ceiling on (number of transpositions)^r, i.e. 15^8.
  std::uint64_t monodromy_max_space = 2562890625ULL;
  // Trivalent maps: number of vertices 2(2g-2+n).
  int trivalent_max_vertices = 4;
  // Wick gluings: total number of polygon sides.
  int wick_max_sides = 12;
  int toda_max_degree = 6;
  int toda_max_lambda = 6;

  // Defaults overridden by "key=value,key=value" pairs; unknown keys throw
  // std::invalid_argument.
  static Budget parse(std::string_view spec, Budget base);
  static Budget parse(std::string_view spec);
  // Defaults overridden by the HURWITZ_LAB_BUDGET environment variable.
  static Budget from_env();

  std::string str() const;
};

}  // namespace hurwitz
