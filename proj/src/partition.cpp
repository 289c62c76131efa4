#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("bad partition part '" + token + "'");
    parts.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Partition(std::move(parts));
}

bool Partition::distinct_parts() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::without(int i) const {
  std::vector<int> p = parts_;
  p.erase(p.begin() + i);
  return Partition(std::move(p));
}

Partition Partition::merged(int i, int j) const {
  if (i == j) throw std::invalid_argument("merge needs two distinct parts");
  std::vector<int> p;
  p.reserve(parts_.size() - 1);
  for (int k = 0; k < length(); ++k)
    if (k != i && k != j) p.push_back(parts_[static_cast<std::size_t>(k)]);
  p.push_back((*this)[i] + (*this)[j]);
  return Partition(std::move(p));
}

Partition Partition::split(int i, int a1) const {
  const int a2 = (*this)[i] - a1;
  if (a1 <= 0 || a2 <= 0) throw std::invalid_argument("split parts must be positive");
  std::vector<int> p = parts_;
  p[static_cast<std::size_t>(i)] = a1;
  p.push_back(a2);
  return Partition(std::move(p));
}

Partition Partition::plus(int a) const {
  std::vector<int> p = parts_;
  p.push_back(a);
  return Partition(std::move(p));
}

Partition Partition::operator+(const Partition& other) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(p));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL + (h >> 17);
  return h;
}

BigInt aut_order(const Partition& mu) {
  BigInt r = 1;
  const auto& p = mu.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    r *= factorial(j - i);
    i = j;
  }
  return r;
}

int ram_count_unchecked(int g, const Partition& mu) { return 2 * g - 2 + mu.size() + mu.length(); }

int ram_count(int g, const Partition& mu) {
  const int r = ram_count_unchecked(g, mu);
  if (r < 0)
    throw NegativeRamification("r(g, mu) = " + std::to_string(r) + " < 0 for g=" + std::to_string(g) +
                               ", mu=" + mu.str());
  return r;
}

namespace {

void partitions_rec(int remaining, int max_part, int len_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    if (len_left <= 0) out.emplace_back(cur);
    return;
  }
  if (len_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, len_left > 0 ? len_left - 1 : -1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, -1, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n, int len) {
  std::vector<Partition> out;
  if (len <= 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, len, cur, out);
  return out;
}

PartitionMoves partition_moves(const Partition& mu) {
  PartitionMoves m;
  const int l = mu.length();
  for (int i = 0; i < l; ++i) m.deletes.push_back({i, mu.without(i)});
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j) m.merges.push_back({i, j, mu.merged(i, j)});
  for (int i = 0; i < l; ++i)
    for (int a1 = 1; a1 < mu[i]; ++a1) m.splits.push_back({i, a1, mu[i] - a1, mu.split(i, a1)});
  for (int i = 0; i < l; ++i) {
    std::vector<int> rest;
    for (int k = 0; k < l; ++k)
      if (k != i) rest.push_back(mu[k]);
    const unsigned subsets = 1u << rest.size();
    for (unsigned s = 0; s < subsets; ++s) {
      std::vector<int> first, second;
      for (std::size_t k = 0; k < rest.size(); ++k) ((s >> k) & 1u ? first : second).push_back(rest[k]);
      Partition p1(first), p2(second);
      for (int a1 = 1; a1 < mu[i]; ++a1) {
        const int a2 = mu[i] - a1;
        m.splittings.push_back({i, a1, a2, p1, p2, p1.plus(a1), p2.plus(a2)});
      }
    }
  }
  return m;
}

namespace {
template <class Vec>
std::vector<Partition> distinct_results(const Vec& v) {
  std::set<Partition> s;
  for (const auto& e : v) s.insert(e.result);
  return {s.begin(), s.end()};
}
}  // namespace

std::vector<Partition> PartitionMoves::distinct_deletes() const { return distinct_results(deletes); }
std::vector<Partition> PartitionMoves::distinct_merges() const { return distinct_results(merges); }
std::vector<Partition> PartitionMoves::distinct_splits() const { return distinct_results(splits); }

}  // namespace hurwitz
