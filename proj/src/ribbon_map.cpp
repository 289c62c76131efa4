#include "hurwitz/ribbon_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

namespace {

std::vector<std::vector<int>> cycles_of(int n, auto next) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int d = 0; d < n; ++d) {
    if (seen[static_cast<std::size_t>(d)]) continue;
    std::vector<int> cyc;
    for (int x = d; !seen[static_cast<std::size_t>(x)]; x = next(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> RibbonMap::vertex_cycles() const {
  return cycles_of(darts(), [this](int d) { return sigma[static_cast<std::size_t>(d)]; });
}

std::vector<std::vector<int>> RibbonMap::face_cycles() const {
  return cycles_of(darts(), [this](int d) { return face_next(d); });
}

int RibbonMap::vertices() const { return static_cast<int>(vertex_cycles().size()); }
int RibbonMap::faces() const { return static_cast<int>(face_cycles().size()); }

int RibbonMap::genus() const {
  const int twice = 2 - euler_characteristic();
  if (twice < 0 || twice % 2) throw std::logic_error("map has non-orientable Euler data");
  return twice / 2;
}

bool RibbonMap::connected() const {
  const int n = darts();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {sigma[static_cast<std::size_t>(d)], alpha[static_cast<std::size_t>(d)]}) {
      if (!seen[static_cast<std::size_t>(e)]) {
        seen[static_cast<std::size_t>(e)] = true;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count == n;
}

void RibbonMap::validate() const {
  const auto n = static_cast<std::size_t>(darts());
  if (alpha.size() != n) throw std::invalid_argument("alpha has wrong size");
  std::vector<bool> hit(n, false);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= n || hit[static_cast<std::size_t>(s)])
      throw std::invalid_argument("sigma is not a permutation");
    hit[static_cast<std::size_t>(s)] = true;
  }
  for (std::size_t d = 0; d < n; ++d) {
    const int a = alpha[d];
    if (a < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(a) == d ||
        alpha[static_cast<std::size_t>(a)] != static_cast<int>(d))
      throw std::invalid_argument("alpha is not a fixed-point-free involution");
  }
  if (!face_label.empty()) {
    if (face_label.size() != n) throw std::invalid_argument("face labels have wrong size");
    for (std::size_t d = 0; d < n; ++d)
      if (face_label[static_cast<std::size_t>(face_next(static_cast<int>(d)))] != face_label[d])
        throw std::invalid_argument("face label not constant on a face");
  }
}

RibbonMap RibbonMap::relabeled(const std::vector<int>& perm) const {
  const auto n = static_cast<std::size_t>(darts());
  RibbonMap out;
  out.sigma.assign(n, 0);
  out.alpha.assign(n, 0);
  if (!face_label.empty()) out.face_label.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    const auto nd = static_cast<std::size_t>(perm[d]);
    out.sigma[nd] = perm[static_cast<std::size_t>(sigma[d])];
    out.alpha[nd] = perm[static_cast<std::size_t>(alpha[d])];
    if (!face_label.empty()) out.face_label[nd] = face_label[d];
  }
  return out;
}

RibbonMap RibbonMap::with_default_face_labels() const {
  RibbonMap out = *this;
  out.face_label.assign(static_cast<std::size_t>(darts()), 0);
  int label = 0;
  for (const auto& cyc : face_cycles()) {
    for (int d : cyc) out.face_label[static_cast<std::size_t>(d)] = label;
    ++label;
  }
  return out;
}

CanonicalForm canonical_form(const RibbonMap& m) {
  return canonical_form(m, m.face_label.empty() ? std::vector<int>(static_cast<std::size_t>(m.darts()), 0)
                                                : m.face_label);
}

CanonicalForm canonical_form(const RibbonMap& m, const std::vector<int>& colors) {
  const int n = m.darts();
  CanonicalForm best;
  if (n == 0) {
    best.rep = m;
    return best;
  }
  if (!m.connected()) throw std::invalid_argument("canonical form needs a connected map");
  std::vector<int> best_perm;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(3 * n));

  for (int start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), -1);
    code.clear();
    int assigned = 0;
    label[static_cast<std::size_t>(start)] = assigned;
    order[static_cast<std::size_t>(assigned++)] = start;
    // -1: still equal to best so far, 0: worse (abandon), 1: better.
    int cmp = best.code.empty() ? 1 : -1;
    for (int i = 0; i < n && cmp != 0; ++i) {
      const int d = order[static_cast<std::size_t>(i)];
      for (int e : {m.sigma[static_cast<std::size_t>(d)], m.alpha[static_cast<std::size_t>(d)]}) {
        if (label[static_cast<std::size_t>(e)] < 0) {
          label[static_cast<std::size_t>(e)] = assigned;
          order[static_cast<std::size_t>(assigned++)] = e;
        }
      }
      const int entries[3] = {label[static_cast<std::size_t>(m.sigma[static_cast<std::size_t>(d)])],
                              label[static_cast<std::size_t>(m.alpha[static_cast<std::size_t>(d)])],
                              colors[static_cast<std::size_t>(d)]};
      for (int v : entries) {
        if (cmp == -1) {
          const int b = best.code[code.size()];
          if (v < b) cmp = 1;
          else if (v > b) cmp = 0;
        }
        code.push_back(v);
      }
    }
    if (cmp == 1) {
      best.code = code;
      best.aut_order = 1;
      best_perm = label;
    } else if (cmp == -1) {
      ++best.aut_order;
    }
  }
  best.rep = m.relabeled(best_perm);
  return best;
}

MapClass classify(const RibbonMap& m) {
  const auto cf = canonical_form(m);
  MapClass c;
  c.rep = cf.rep;
  c.aut_order = cf.aut_order;
  c.genus = m.genus();
  c.cells = m.faces();
  return c;
}

}  // namespace hurwitz
