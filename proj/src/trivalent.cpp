#include "hurwitz/trivalent.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <omp.h>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::vector<int> trivalent_rotation(int vertices) {
  std::vector<int> sigma(static_cast<std::size_t>(3 * vertices));
  for (int v = 0; v < vertices; ++v)
    for (int k = 0; k < 3; ++k) sigma[static_cast<std::size_t>(3 * v + k)] = 3 * v + (k + 1) % 3;
  return sigma;
}

namespace {

void extend_pairing(std::vector<int>& alpha, int reached, int vertices, std::vector<std::vector<int>>& out) {
  const int reached_darts = 3 * reached;
  int d = 0;
  while (d < reached_darts && alpha[static_cast<std::size_t>(d)] >= 0) ++d;
  if (d == reached_darts) {
    if (reached == vertices) out.push_back(alpha);
    return;
  }
  for (int e = d + 1; e < reached_darts; ++e) {
    if (alpha[static_cast<std::size_t>(e)] >= 0) continue;
    alpha[static_cast<std::size_t>(d)] = e;
    alpha[static_cast<std::size_t>(e)] = d;
    extend_pairing(alpha, reached, vertices, out);
    alpha[static_cast<std::size_t>(d)] = alpha[static_cast<std::size_t>(e)] = -1;
  }
  if (reached < vertices) {
    const int e = reached_darts;
    alpha[static_cast<std::size_t>(d)] = e;
    alpha[static_cast<std::size_t>(e)] = d;
    extend_pairing(alpha, reached + 1, vertices, out);
    alpha[static_cast<std::size_t>(d)] = alpha[static_cast<std::size_t>(e)] = -1;
  }
}

void check_trivalent(int g, int n, const Budget& budget) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw UnstableRange("trivalent maps need 2g-2+n > 0");
  const int vertices = 2 * (2 * g - 2 + n);
  if (vertices > budget.trivalent_max_vertices)
    throw BudgetExceeded("trivalent maps: " + std::to_string(vertices) + " vertices exceeds cap " +
                         std::to_string(budget.trivalent_max_vertices));
}

using ClassMap = std::map<std::vector<int>, MapClass>;

// All face labelings of an unlabeled map, merged into classes.
void add_labelings(const RibbonMap& m, int g, ClassMap& classes) {
  const auto faces = m.face_cycles();
  std::vector<int> labels(faces.size());
  std::iota(labels.begin(), labels.end(), 0);
  do {
    RibbonMap lm = m;
    lm.face_label.assign(static_cast<std::size_t>(m.darts()), 0);
    for (std::size_t f = 0; f < faces.size(); ++f)
      for (int d : faces[f]) lm.face_label[static_cast<std::size_t>(d)] = labels[f];
    auto cf = canonical_form(lm);
    if (classes.count(cf.code)) continue;
    classes.emplace(cf.code, MapClass{cf.rep, cf.aut_order, g, static_cast<int>(faces.size())});
  } while (std::next_permutation(labels.begin(), labels.end()));
}

std::vector<MapClass> to_vector(const ClassMap& classes) {
  std::vector<MapClass> out;
  for (const auto& [code, c] : classes) out.push_back(c);
  return out;
}

}  // namespace

std::vector<std::vector<int>> connected_trivalent_pairings(int vertices) {
  std::vector<std::vector<int>> out;
  if (vertices <= 0) return out;
  std::vector<int> alpha(static_cast<std::size_t>(3 * vertices), -1);
  extend_pairing(alpha, 1, vertices, out);
  return out;
}

std::vector<MapClass> enumerate_trivalent_serial(int g, int n, const Budget& budget) {
  check_trivalent(g, n, budget);
  const int vertices = 2 * (2 * g - 2 + n);
  const auto sigma = trivalent_rotation(vertices);
  std::map<std::vector<int>, RibbonMap> unlabeled;
  for (const auto& alpha : connected_trivalent_pairings(vertices)) {
    RibbonMap m{sigma, alpha, {}};
    if (m.faces() != n) continue;
    auto cf = canonical_form(m);
    unlabeled.emplace(std::move(cf.code), std::move(cf.rep));
  }
  ClassMap classes;
  for (const auto& [code, m] : unlabeled) add_labelings(m, g, classes);
  return to_vector(classes);
}

std::vector<MapClass> enumerate_trivalent(int g, int n, const Budget& budget) {
  check_trivalent(g, n, budget);
  const int vertices = 2 * (2 * g - 2 + n);
  const auto sigma = trivalent_rotation(vertices);
  const auto pairings = connected_trivalent_pairings(vertices);

  std::map<std::vector<int>, RibbonMap> unlabeled;
#pragma omp parallel
  {
    std::map<std::vector<int>, RibbonMap> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long i = 0; i < static_cast<long>(pairings.size()); ++i) {
      RibbonMap m{sigma, pairings[static_cast<std::size_t>(i)], {}};
      if (m.faces() != n) continue;
      auto cf = canonical_form(m);
      local.emplace(std::move(cf.code), std::move(cf.rep));
    }
#pragma omp critical
    unlabeled.merge(local);
  }

  std::vector<const RibbonMap*> reps;
  for (const auto& [code, m] : unlabeled) reps.push_back(&m);
  ClassMap classes;
#pragma omp parallel
  {
    ClassMap local;
#pragma omp for schedule(dynamic) nowait
    for (long i = 0; i < static_cast<long>(reps.size()); ++i) add_labelings(*reps[static_cast<std::size_t>(i)], g, local);
#pragma omp critical
    classes.merge(local);
  }
  return to_vector(classes);
}

Rat edge_weight(const RibbonMap& m, const std::vector<Rat>& s) {
  const std::vector<int> lab = m.face_label.empty() ? m.with_default_face_labels().face_label : m.face_label;
  Rat w(1);
  for (int d = 0; d < m.darts(); ++d) {
    const int e = m.alpha[static_cast<std::size_t>(d)];
    if (e < d) continue;
    w /= s[static_cast<std::size_t>(lab[static_cast<std::size_t>(d)])] +
         s[static_cast<std::size_t>(lab[static_cast<std::size_t>(e)])];
  }
  return w;
}

Rat kontsevich_sum(const std::vector<MapClass>& classes, int g, const std::vector<Rat>& s) {
  const int n = static_cast<int>(s.size());
  const Rat scale = pow(Rat(2), 2 * g - 2 + n);
  Rat total(0);
  for (const auto& c : classes) total += edge_weight(c.rep, s) / Rat(c.aut_order);
  return scale * total;
}

Rat kontsevich_sum(int g, const std::vector<Rat>& s, const Budget& budget) {
  return kontsevich_sum(enumerate_trivalent(g, static_cast<int>(s.size()), budget), g, s);
}

}  // namespace hurwitz
