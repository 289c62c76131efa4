#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/budget.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

inline constexpr int kMaxSheets = 12;

// Permutation of {0..degree-1}; entries past degree are unused.
struct Permutation {
  int degree = 0;
  std::array<std::uint8_t, kMaxSheets> image{};

  static Permutation identity(int degree);
  // The canonical element of cycle type mu: (0 1 .. m1-1)(m1 ..) ...
  static Permutation of_cycle_type(const Partition& mu);
  Partition cycle_type() const;
  int cycle_count() const;
  friend bool operator==(const Permutation& a, const Permutation& b) {
    if (a.degree != b.degree) return false;
    for (int i = 0; i < a.degree; ++i)
      if (a.image[static_cast<std::size_t>(i)] != b.image[static_cast<std::size_t>(i)]) return false;
    return true;
  }
};

// Unordered pair {a, b} of sheets, a < b, 0-based.
struct Transposition {
  int a = 0, b = 1;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

struct TranspositionTuple {
  int degree = 0;
  std::vector<Transposition> entries;

  // Ordered product entries[0] * entries[1] * ... acting on the right.
  Permutation product() const;
  // Union-find over the transposition supports.
  bool transitive() const;
};

// All d(d-1)/2 transpositions of S_d in lexicographic order.
std::vector<Transposition> transpositions(int degree);

enum class Method { monodromy, degeneration, elsv, closed_form };
std::string to_string(Method m);

struct HurwitzValue {
  int genus = 0;
  Partition mu;
  Rat value;
  Method method = Method::monodromy;
};

// --- monodromy (symmetric-group) enumeration ---

// Number of r-tuples of transpositions in S_|mu| whose product has cycle type
// mu and whose supports connect all sheets, r = r(g, mu). Parallel over the
// first tuple entry.
std::uint64_t count_monodromy_tuples(int g, const Partition& mu, const Budget& budget = Budget::from_env());
// Single-threaded reference for the same count.
std::uint64_t count_monodromy_tuples_serial(int g, const Partition& mu,
                                            const Budget& budget = Budget::from_env());
// Transitive r-tuples whose ordered product equals target exactly.
std::uint64_t count_transitive_tuples_with_product(int r, const Permutation& target,
                                                   const Budget& budget = Budget::from_env());
// Every transitive tuple counted by count_monodromy_tuples (small cases only).
std::vector<TranspositionTuple> list_monodromy_tuples(int g, const Partition& mu,
                                                      const Budget& budget = Budget::from_env());

// H_{g,mu} = (1/|mu|!) * count_monodromy_tuples(g, mu).
Rat hurwitz_monodromy(int g, const Partition& mu, const Budget& budget = Budget::from_env());

// Number of k-tuples of transpositions whose ordered product is the fixed
// element Permutation::of_cycle_type(mu). No transitivity condition.
BigInt cycle_factorization_count(const Partition& mu, int k, const Budget& budget = Budget::from_env());
// k! * prod m^(m-1)/m!, valid for k = sum (m_i - 1).
BigInt cycle_factorization_formula(const Partition& mu);

// --- degeneration recursion ---

// Memoized marked Hurwitz numbers H*_{g,mu} = |Aut(mu)| H_{g,mu}, computed by
// edge removal: merge two cells, non-disconnecting split, disconnecting split.
// Not thread-safe; share through hurwitz_degeneration() instead.
class DegenerationTable {
public:
  Rat marked(int g, const Partition& mu);
  Rat hurwitz(int g, const Partition& mu);
  std::size_t size() const { return memo_.size(); }

private:
  Rat compute(int g, const Partition& mu);
  std::map<std::pair<int, Partition>, Rat> memo_;
};

// Process-wide memoized H_{g,mu} via the degeneration recursion (guarded).
Rat hurwitz_degeneration(int g, const Partition& mu);
Rat hurwitz_degeneration_marked(int g, const Partition& mu);

// --- genus 0 closed forms ---

enum class ClosedForm {
  one_part,         // H_{0,(n)} = n^(n-3)
  trivial_profile,  // H_{0,1^d} = (2d-2)!/d! * d^(d-3)
};
Rat hurwitz_closed_genus0(ClosedForm variant, int n);

}  // namespace hurwitz
