#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Integer partition with parts stored weakly decreasing. Construction
// sorts, so two partitions compare equal iff they are equal as multisets.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // "3,2,1" or "3 2 1"; parts must be positive.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  bool distinct_parts() const;
  int multiplicity(int value) const;

  // Ramification moves; indices refer to positions in parts().
  Partition without(int i) const;
  Partition merged(int i, int j) const;
  Partition split(int i, int a1) const;
  Partition plus(int a) const;
  Partition operator+(const Partition& other) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// prod over distinct part values m of (multiplicity of m)!
BigInt aut_order(const Partition& mu);

// r(g, mu) = 2g - 2 + |mu| + l(mu). Throws NegativeRamification if negative.
int ram_count(int g, const Partition& mu);
// Same quantity without the check.
int ram_count_unchecked(int g, const Partition& mu);

// All partitions of n (weakly decreasing order of generation).
std::vector<Partition> partitions_of(int n);
// Partitions of n with exactly len parts.
std::vector<Partition> partitions_of(int n, int len);

struct PartitionMoves {
  struct Delete {
    int index;
    Partition result;
  };
  struct Merge {
    int i, j;
    Partition result;
  };
  struct Split {
    int index, a1, a2;
    Partition result;
  };
  // Ordered pair (mu1, mu2) whose union is mu - m_i, chosen by subsets of
  // the remaining labelled positions, together with a split a1 + a2 = m_i
  // and the augmented partitions mu1 + a1, mu2 + a2.
  struct Splitting {
    int index, a1, a2;
    Partition first, second;
    Partition first_plus, second_plus;
  };
  std::vector<Delete> deletes;
  std::vector<Merge> merges;      // ordered pairs i != j
  std::vector<Split> splits;      // ordered (a1, a2), a1 + a2 = m_i
  std::vector<Splitting> splittings;

  // Distinct resulting partitions of each kind.
  std::vector<Partition> distinct_deletes() const;
  std::vector<Partition> distinct_merges() const;
  std::vector<Partition> distinct_splits() const;
};

PartitionMoves partition_moves(const Partition& mu);

}  // namespace hurwitz
