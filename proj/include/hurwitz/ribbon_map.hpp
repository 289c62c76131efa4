#pragma once

#include <string>
#include <vector>

namespace hurwitz {

// Combinatorial map on darts 0..D-1. sigma rotates darts counterclockwise
// around their vertex, alpha pairs the two darts of an edge, and faces are
// the cycles of sigma o alpha (d -> sigma[alpha[d]]). face_label, when
// present, assigns every dart the label of its face.
struct RibbonMap {
  std::vector<int> sigma;
  std::vector<int> alpha;
  std::vector<int> face_label;

  int darts() const { return static_cast<int>(sigma.size()); }
  // Face successor sigma[alpha[d]].
  int face_next(int d) const { return sigma[static_cast<std::size_t>(alpha[static_cast<std::size_t>(d)])]; }

  std::vector<std::vector<int>> vertex_cycles() const;
  std::vector<std::vector<int>> face_cycles() const;
  int vertices() const;
  int edges() const { return darts() / 2; }
  int faces() const;
  int euler_characteristic() const { return vertices() - edges() + faces(); }
  // (2 - V + E - F) / 2 for connected maps.
  int genus() const;
  bool connected() const;

  // Throws std::invalid_argument unless sigma is a permutation, alpha a
  // fixed-point-free involution and face labels are constant on faces.
  void validate() const;

  // Map with dart d renamed perm[d].
  RibbonMap relabeled(const std::vector<int>& perm) const;
  // face_label from the face cycles in order of their smallest dart.
  RibbonMap with_default_face_labels() const;

  friend bool operator==(const RibbonMap&, const RibbonMap&) = default;
};

// Lexicographically smallest breadth-first relabeling over all start darts.
// Colors (by default the face labels) must be preserved by isomorphisms.
struct CanonicalForm {
  std::vector<int> code;
  RibbonMap rep;
  // Number of start darts attaining the minimum, i.e. the order of the
  // color-preserving automorphism group of a connected map.
  long aut_order = 1;
};
CanonicalForm canonical_form(const RibbonMap& m);
CanonicalForm canonical_form(const RibbonMap& m, const std::vector<int>& colors);

struct MapClass {
  RibbonMap rep;
  long aut_order = 1;
  int genus = 0;
  int cells = 0;

  friend bool operator==(const MapClass&, const MapClass&) = default;
};
MapClass classify(const RibbonMap& m);

}  // namespace hurwitz
