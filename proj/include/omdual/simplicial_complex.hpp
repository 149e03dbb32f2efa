#pragma once

#include <algorithm>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "omdual/bits.hpp"
#include "omdual/ground.hpp"

namespace omdual {

enum class ComplexKind { void_complex, empty_faces_only, general };

/**
 * Simplicial complex on a labeled vertex set, stored as its facet antichain.
 * Two degenerate states are kept distinct: the void complex (no faces at
 * all, empty facet list) and the complex whose only face is the empty set
 * (facet list {emptyset}).
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_masks(GroundSet vertices, std::vector<Mask> faces) {
    const Mask all = vertices.all();
    for (Mask f : faces)
      if (f & ~all)
        throw std::invalid_argument("face uses a vertex outside the vertex set");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Mask> maximal;
    for (Mask f : faces) {
      bool dominated = false;
      for (Mask g : faces)
        if (f != g && (f & ~g) == 0) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), lex_less);
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    k.facets_ = std::move(maximal);
    return k;
  }

  static SimplicialComplex from_facets(GroundSet vertices,
                                       const std::vector<std::vector<std::string>>& faces) {
    std::vector<Mask> masks;
    masks.reserve(faces.size());
    for (const auto& face : faces) masks.push_back(vertices.mask_of(face));
    return from_masks(std::move(vertices), std::move(masks));
  }

  static SimplicialComplex full_simplex(GroundSet vertices) {
    const Mask all = vertices.all();
    return from_masks(std::move(vertices), {all});
  }

  const GroundSet& vertices() const { return vertices_; }
  int vertex_count() const { return vertices_.size(); }
  const std::vector<Mask>& facets() const { return facets_; }

  ComplexKind kind() const {
    if (facets_.empty()) return ComplexKind::void_complex;
    if (facets_.size() == 1 && facets_[0] == 0) return ComplexKind::empty_faces_only;
    return ComplexKind::general;
  }

  bool is_void() const { return facets_.empty(); }
  bool is_full_simplex() const {
    return facets_.size() == 1 && facets_[0] == vertices_.all() &&
           vertices_.size() > 0;
  }

  // Dimension of the largest face; -1 for the empty-set complex, -2 when
  // there are no faces at all.
  int dim() const {
    if (is_void()) return -2;
    int best = -1;
    for (Mask f : facets_) best = std::max(best, popcount(f) - 1);
    return best;
  }

  bool is_face(Mask s) const {
    for (Mask f : facets_)
      if ((s & ~f) == 0) return true;
    return false;
  }

  // All faces with exactly k vertices, in lexicographic order.
  std::vector<Mask> faces_of_size(int k) const {
    std::unordered_set<Mask> seen;
    for (Mask f : facets_) {
      const std::vector<int> verts = bit_indices(f);
      const int t = static_cast<int>(verts.size());
      if (t < k || k < 0) continue;
      for_each_subset(t, k, [&](Mask packed) {
        Mask face = 0;
        for (int j : bit_indices(packed)) face |= bit(verts[static_cast<std::size_t>(j)]);
        seen.insert(face);
      });
    }
    std::vector<Mask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  std::vector<long long> f_vector() const {
    std::vector<long long> f;
    for (int k = 0; k <= dim() + 1; ++k)
      f.push_back(static_cast<long long>(faces_of_size(k).size()));
    return f;
  }

  bool operator==(const SimplicialComplex& o) const {
    return vertices_ == o.vertices_ && facets_ == o.facets_;
  }

 private:
  GroundSet vertices_;
  std::vector<Mask> facets_;
};

/**
 * Inclusion-minimal non-faces, found level by level: candidates of size s+1
 * are faces of size s extended by one vertex, so every face and every
 * minimal non-face is visited without scanning the full powerset. The void
 * complex has the empty set as its one minimal non-face.
 */
inline std::vector<Mask> minimal_nonfaces(const SimplicialComplex& k) {
  std::vector<Mask> out;
  if (k.is_void()) {
    out.push_back(0);
    return out;
  }
  const int n = k.vertex_count();
  std::unordered_set<Mask> level = {Mask{0}};
  for (int s = 0; s < n && !level.empty(); ++s) {
    std::unordered_set<Mask> candidates;
    for (Mask f : level)
      for (int v = 0; v < n; ++v)
        if (!has_bit(f, v)) candidates.insert(f | bit(v));
    std::unordered_set<Mask> next;
    for (Mask c : candidates) {
      if (k.is_face(c)) {
        next.insert(c);
        continue;
      }
      bool all_subfaces = true;
      for (int v : bit_indices(c))
        if (!level.count(c & ~bit(v))) {
          all_subfaces = false;
          break;
        }
      if (all_subfaces) out.push_back(c);
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Alexander dual on the same vertex set: facets are the complements of the
// minimal non-faces. The degenerate conventions (full simplex <-> void,
// empty-set complex <-> boundary of the simplex) follow from the definition.
inline SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  const Mask all = k.vertices().all();
  std::vector<Mask> facets;
  for (Mask nf : minimal_nonfaces(k)) facets.push_back(all & ~nf);
  return SimplicialComplex::from_masks(k.vertices(), std::move(facets));
}

namespace detail {

// Vertex sets of the form x1..xm,y1..ym over a common element list get
// monomial factors ordered by element (x before y on ties); otherwise the
// vertex order is used.
struct XyLayout {
  bool present = false;
  std::vector<int> element;  // per vertex: element position
  std::vector<int> side;     // per vertex: 0 for x, 1 for y
};

inline XyLayout detect_xy_layout(const GroundSet& vertices) {
  XyLayout layout;
  const int n = vertices.size();
  if (n == 0 || n % 2 != 0) return layout;
  const int m = n / 2;
  for (int i = 0; i < m; ++i) {
    const std::string& x = vertices.label(i);
    const std::string& y = vertices.label(m + i);
    if (x.size() < 2 || y.size() < 2 || x[0] != 'x' || y[0] != 'y' ||
        x.substr(1) != y.substr(1))
      return layout;
  }
  layout.present = true;
  layout.element.resize(static_cast<std::size_t>(n));
  layout.side.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    layout.element[static_cast<std::size_t>(i)] = i;
    layout.side[static_cast<std::size_t>(i)] = 0;
    layout.element[static_cast<std::size_t>(m + i)] = i;
    layout.side[static_cast<std::size_t>(m + i)] = 1;
  }
  return layout;
}

}  // namespace detail

/**
 * Squarefree monomial generators of the Stanley-Reisner ideal: one monomial
 * per minimal non-face, spelled "a*b*c" and returned sorted as strings.
 */
inline std::vector<std::string> stanley_reisner_generators(const SimplicialComplex& k) {
  const detail::XyLayout layout = detail::detect_xy_layout(k.vertices());
  std::vector<std::string> out;
  for (Mask nf : minimal_nonfaces(k)) {
    std::vector<int> verts = bit_indices(nf);
    if (layout.present)
      std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        const auto ka = std::make_pair(layout.element[static_cast<std::size_t>(a)],
                                       layout.side[static_cast<std::size_t>(a)]);
        const auto kb = std::make_pair(layout.element[static_cast<std::size_t>(b)],
                                       layout.side[static_cast<std::size_t>(b)]);
        return ka < kb;
      });
    std::string monomial;
    if (verts.empty()) monomial = "1";
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (i) monomial += '*';
      monomial += k.vertices().label(verts[i]);
    }
    out.push_back(std::move(monomial));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline nlohmann::json complex_to_json(const SimplicialComplex& k) {
  nlohmann::json j;
  j["vertices"] = k.vertices().labels();
  nlohmann::json facets = nlohmann::json::array();
  for (Mask f : k.facets()) facets.push_back(k.vertices().labels_of(f));
  j["facets"] = std::move(facets);
  return j;
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
    throw std::invalid_argument("complex JSON needs \"vertices\" and \"facets\"");
  GroundSet vertices(j.at("vertices").get<std::vector<std::string>>());
  if (!j.at("facets").is_array())
    throw std::invalid_argument("complex JSON \"facets\" must be an array");
  std::vector<std::vector<std::string>> faces;
  for (const auto& f : j.at("facets"))
    faces.push_back(f.get<std::vector<std::string>>());
  return SimplicialComplex::from_facets(std::move(vertices), faces);
}

}  // namespace omdual
