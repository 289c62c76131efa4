#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hurwitz/intersection.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Hodge integrals <tau_k1 ... tau_kn lambda_k>_g keyed by canonical
// Correlator.
class HodgeTable {
public:
  void set(const Correlator& c, const Rat& v);
  bool contains(const Correlator& c) const;
  // Throws MissingHodgeEntry naming the correlator.
  const Rat& at(const Correlator& c) const;
  void merge(const HodgeTable& other);
  std::size_t size() const { return entries_.size(); }
  const std::map<Correlator, Rat>& entries() const { return entries_; }

  friend bool operator==(const HodgeTable&, const HodgeTable&) = default;

private:
  std::map<Correlator, Rat> entries_;
};

// Pure psi entries (lambda index 0) of genus g with l points, from KdV.
HodgeTable psi_table(int g, int l);

// H_{g,mu} from the ELSV formula. The unstable cases (0,1) and (0,2) use
// the conventional integrals 1/mu_1^2 and 1/(mu_1 + mu_2).
Rat elsv_evaluate(int g, const Partition& mu, const HodgeTable& table);

// Coefficient of the unknown (taus, k) in the ELSV linear form at mu:
// (-1)^k times the sum over distinct orderings of taus of prod mu_i^{tau_i}.
BigInt elsv_coefficient(const Partition& mu, const std::vector<int>& taus, int k);
// H_{g,mu} |Aut mu| / (r! prod mu_i^mu_i / mu_i!), the value of the linear form.
Rat elsv_normalized(int g, const Partition& mu, const Rat& h);

using HurwitzOracle = std::function<Rat(int, const Partition&)>;

struct HodgeInversion {
  HodgeTable table;
  std::vector<Correlator> unknowns;
  std::vector<Partition> profiles;   // rows of the full-rank system
  std::vector<Partition> held_out;   // verification profiles
};

// Recovers all <tau_k1 .. tau_kl lambda_k>_g with sum k_i + k = 3g-3+l from
// Hurwitz numbers with l distinct parts drawn from {1, 2, 3, 5, 7, 11, ...}.
// Throws RankDeficient when the pool runs out.
HodgeInversion hodge_invert(int g, int l, const HurwitzOracle& oracle, int pool_size = 16);

// hodge_invert with the degeneration recursion as oracle, cached per (g, l).
const HodgeTable& inverted_hodge_table(int g, int l);

}  // namespace hurwitz
