#include "hurwitz/branching_graph.hpp"

#include <algorithm>
#include <map>

#include "hurwitz/errors.hpp"

namespace hurwitz {

int BranchingGraph::cells() const { return map.darts() == 0 ? 1 : map.faces(); }

Rat BranchingGraph::corner_angle(int d) const {
  const int next = map.sigma[static_cast<std::size_t>(d)];
  int diff = (edge_label[static_cast<std::size_t>(next)] - edge_label[static_cast<std::size_t>(d)]) % r;
  if (diff <= 0) diff += r;
  return Rat(diff, r);
}

Partition BranchingGraph::profile() const {
  std::vector<int> parts;
  for (const auto& p : perimeters) {
    if (!p.is_integer()) throw PerimeterMismatch("non-integral cell perimeter " + p.str());
    parts.push_back(static_cast<int>(p.num().get_si()));
  }
  return Partition(parts);
}

BranchingGraph branching_graph_from_tuple(const TranspositionTuple& tuple) {
  if (!tuple.transitive()) throw NotTransitive("transposition tuple does not act transitively on sheets");
  BranchingGraph h;
  h.degree = tuple.degree;
  h.r = static_cast<int>(tuple.entries.size());
  const auto darts = static_cast<std::size_t>(2 * h.r);
  h.map.sigma.assign(darts, 0);
  h.map.alpha.assign(darts, 0);
  h.dart_vertex.assign(darts, 0);
  h.edge_label.assign(darts, 0);

  std::vector<std::vector<int>> at_vertex(static_cast<std::size_t>(h.degree));
  for (int k = 0; k < h.r; ++k) {
    const auto& t = tuple.entries[static_cast<std::size_t>(k)];
    if (t.a == t.b) throw std::invalid_argument("self-edge in transposition tuple");
    const int d0 = 2 * k, d1 = 2 * k + 1;
    h.map.alpha[static_cast<std::size_t>(d0)] = d1;
    h.map.alpha[static_cast<std::size_t>(d1)] = d0;
    h.dart_vertex[static_cast<std::size_t>(d0)] = t.a;
    h.dart_vertex[static_cast<std::size_t>(d1)] = t.b;
    h.edge_label[static_cast<std::size_t>(d0)] = h.edge_label[static_cast<std::size_t>(d1)] = k + 1;
    at_vertex[static_cast<std::size_t>(t.a)].push_back(d0);
    at_vertex[static_cast<std::size_t>(t.b)].push_back(d1);
  }
  // Darts were appended in label order, so each list is already sorted.
  for (const auto& ds : at_vertex)
    for (std::size_t i = 0; i < ds.size(); ++i)
      h.map.sigma[static_cast<std::size_t>(ds[i])] = ds[(i + 1) % ds.size()];

  if (h.r == 0) {
    h.perimeters = {Rat(1)};
    h.genus = 0;
  } else {
    h.map.validate();
    for (const auto& face : h.map.face_cycles()) {
      Rat per(0);
      for (int d : face) per += h.corner_angle(h.map.alpha[static_cast<std::size_t>(d)]);
      h.perimeters.push_back(per);
    }
    // Isolated vertices cannot occur: transitivity with r > 0 touches every sheet.
    const int euler = h.degree - h.r + static_cast<int>(h.perimeters.size());
    if ((2 - euler) % 2) throw PerimeterMismatch("odd Euler characteristic");
    h.genus = (2 - euler) / 2;
  }

  Rat total(0);
  for (const auto& p : h.perimeters) {
    if (p.sign() <= 0) throw PerimeterMismatch("nonpositive cell perimeter");
    total += p;
  }
  if (total != Rat(h.degree)) throw PerimeterMismatch("cell perimeters do not sum to the degree");
  if (h.profile() != tuple.product().cycle_type())
    throw PerimeterMismatch("cell perimeters " + h.profile().str() + " differ from product cycle type " +
                            tuple.product().cycle_type().str());
  return h;
}

CanonicalForm branching_canonical_form(const BranchingGraph& h) {
  if (h.map.darts() == 0) return canonical_form(h.map);
  return canonical_form(h.map, h.edge_label);
}

MapClass homotopy_type(const BranchingGraph& h) {
  const int n = h.cells();
  if (2 * h.genus - 2 + n <= 0)
    throw UnstableResult("homotopy type needs 2g-2+n > 0, got g=" + std::to_string(h.genus) +
                         " n=" + std::to_string(n));
  const Partition mu = h.profile();
  if (!mu.distinct_parts()) throw std::invalid_argument("homotopy type needs distinct cell perimeters");

  const auto darts = static_cast<std::size_t>(h.map.darts());
  std::vector<int> sigma = h.map.sigma, alpha = h.map.alpha;
  std::vector<int> label(darts, 0);
  {
    const auto faces = h.map.face_cycles();
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const int per = static_cast<int>(h.perimeters[f].num().get_si());
      const auto pos = std::find(mu.parts().begin(), mu.parts().end(), per) - mu.parts().begin();
      for (int d : faces[f]) label[static_cast<std::size_t>(d)] = static_cast<int>(pos);
    }
  }
  std::vector<bool> alive(darts, true);
  auto pred = [&](int y) {
    int p = y;
    while (sigma[static_cast<std::size_t>(p)] != y) p = sigma[static_cast<std::size_t>(p)];
    return p;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t xi = 0; xi < darts; ++xi) {
      if (!alive[xi]) continue;
      const int x = static_cast<int>(xi);
      const int sx = sigma[xi];
      if (sx == x) {
        // Univalent vertex: delete the edge.
        const int y = alpha[xi];
        if (sigma[static_cast<std::size_t>(y)] == y) throw UnstableResult("graph reduces to a single edge");
        const int p = pred(y);
        sigma[static_cast<std::size_t>(p)] = sigma[static_cast<std::size_t>(y)];
        alive[xi] = alive[static_cast<std::size_t>(y)] = false;
        changed = true;
      } else if (sigma[static_cast<std::size_t>(sx)] == x) {
        // Bivalent vertex: join its two edges.
        const int y = sx;
        const int xo = alpha[xi], yo = alpha[static_cast<std::size_t>(y)];
        if (xo == y) throw UnstableResult("graph reduces to a circle");
        alpha[static_cast<std::size_t>(xo)] = yo;
        alpha[static_cast<std::size_t>(yo)] = xo;
        alive[xi] = alive[static_cast<std::size_t>(y)] = false;
        changed = true;
      }
    }
  }

  std::vector<int> index(darts, -1);
  int kept = 0;
  for (std::size_t d = 0; d < darts; ++d)
    if (alive[d]) index[d] = kept++;
  RibbonMap core;
  core.sigma.resize(static_cast<std::size_t>(kept));
  core.alpha.resize(static_cast<std::size_t>(kept));
  core.face_label.resize(static_cast<std::size_t>(kept));
  for (std::size_t d = 0; d < darts; ++d) {
    if (!alive[d]) continue;
    const auto nd = static_cast<std::size_t>(index[d]);
    core.sigma[nd] = index[static_cast<std::size_t>(sigma[d])];
    core.alpha[nd] = index[static_cast<std::size_t>(alpha[d])];
    core.face_label[nd] = label[d];
  }
  core.validate();
  MapClass c = classify(core);
  if (c.cells != n || c.genus != h.genus) throw std::logic_error("homotopy type changed the topology");
  return c;
}

}  // namespace hurwitz
