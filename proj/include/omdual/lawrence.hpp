#pragma once

#include <algorithm>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omdual/homology.hpp"
#include "omdual/oriented_matroid.hpp"
#include "omdual/simplicial_complex.hpp"

namespace omdual {

/**
 * Oriented matroid with a distinguished non-loop element f; the geometric
 * reading is an affine point or hyperplane configuration with f as the
 * element at infinity.
 */
struct AffineOM {
  OrientedMatroid om;
  int f = 0;
};

inline AffineOM make_affine(OrientedMatroid om, int f) {
  if (f < 0 || f >= om.size())
    throw std::invalid_argument("distinguished element out of range");
  bool in_cocircuit = false;
  for (const auto& c : om.cocircuits)
    if (has_bit(c.support(), f)) {
      in_cocircuit = true;
      break;
    }
  if (!in_cocircuit)
    throw std::invalid_argument("distinguished element '" + om.ground.label(f) +
                                "' is a loop");
  return {std::move(om), f};
}

inline AffineOM make_affine(OrientedMatroid om, const std::string& label) {
  const int f = om.ground.index_checked(label);
  return make_affine(std::move(om), f);
}

/**
 * Block matrix (D 0; I I) whose columns x1..xn,y1..yn span the Lawrence
 * polytope of D.
 */
inline RatMat lawrence_matrix(const RatMat& d) {
  const int r = static_cast<int>(d.rows());
  const int n = static_cast<int>(d.cols());
  RatMat out = RatMat::Zero(r + n, 2 * n);
  out.topLeftCorner(r, n) = d;
  out.bottomLeftCorner(n, n) = RatMat::Identity(n, n);
  out.bottomRightCorner(n, n) = RatMat::Identity(n, n);
  return out;
}

inline GroundSet xy_ground(const GroundSet& base) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(2 * base.size()));
  for (int i = 0; i < base.size(); ++i) labels.push_back("x" + base.label(i));
  for (int i = 0; i < base.size(); ++i) labels.push_back("y" + base.label(i));
  return GroundSet(std::move(labels));
}

namespace detail {

// Chirotope of M* extended by an antiparallel copy of every element:
// on x1..xn,y1..yn a basis is degenerate when it uses both copies of an
// element, and otherwise inherits the dual sign with one flip per y.
inline Chirotope antiparallel_extension(const Chirotope& dual_chi) {
  const int n = dual_chi.n();
  const int r = dual_chi.rank();
  Chirotope ext(2 * n, r);
  const Mask low = full_mask(n);
  for_each_subset(2 * n, r, [&](Mask s) {
    const Mask sx = s & low;
    const Mask sy = s >> n;
    if (sx & sy) {
      ext.set_sign_mask(s, 0);
      return;
    }
    std::vector<int> seq = bit_indices(sx);
    for (int i : bit_indices(sy)) seq.push_back(i);
    int sign = dual_chi.sign_tuple(seq);
    if (popcount(sy) % 2 == 1) sign = -sign;
    ext.set_sign_mask(s, sign);
  });
  return ext;
}

}  // namespace detail

/**
 * Lawrence oriented matroid Lambda(m): the dual of M* together with an
 * antiparallel copy of every element. Rank n + rank(m) on 2n elements.
 * Needs a realization or a chirotope; circuit/cocircuit data alone does not
 * determine the extension.
 */
inline OrientedMatroid lawrence_om(const OrientedMatroid& m) {
  const GroundSet ground = xy_ground(m.ground);
  if (!m.chi && !m.realization)
    throw std::invalid_argument(
        "lawrence_om needs a realization or a chirotope");
  // The combinatorial route is used even for realized input: enumerating
  // cocircuits straight from the Lawrence matrix costs a rational
  // elimination per column subset, while chirotope lookups are constant.
  const Chirotope base =
      m.chi ? *m.chi : Chirotope::from_matrix(*m.realization);
  const Chirotope ext = detail::antiparallel_extension(base.dual());
  OrientedMatroid out = om_from_chirotope(ext.dual(), ground);
  if (m.realization) {
    out.realization = row_space_basis(lawrence_matrix(*m.realization));
    out.provenance = Provenance::realized;
  }
  return out;
}

struct FacetCountReport {
  int n = 0;
  int coloops = 0;
  int unsigned_cocircuits = 0;
  long long predicted = 0;
  long long enumerated = 0;
  bool ok = false;
};

/**
 * Facet-count law for Lawrence polytopes: n - l + 2c facets, where l counts
 * coloops and c counts unsigned cocircuits of m. Facets of Lambda(m) are
 * enumerated as supports of its positive cocircuits.
 */
inline FacetCountReport facet_count_check(const OrientedMatroid& m) {
  FacetCountReport report;
  report.n = m.size();
  report.coloops = popcount(structural_flags(m).coloops);
  report.unsigned_cocircuits = static_cast<int>(m.cocircuits.size()) / 2;
  report.predicted =
      report.n - report.coloops + 2LL * report.unsigned_cocircuits;
  const OrientedMatroid lambda = lawrence_om(m);
  std::vector<Mask> facets;
  for (const auto& c : lambda.cocircuits)
    if (c.is_positive()) facets.push_back(c.support());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  report.enumerated = static_cast<long long>(facets.size());
  report.ok = report.predicted == report.enumerated;
  return report;
}

/**
 * The complex Delta(M,f) on x1..xn,y1..yn: one facet per cocircuit C with
 * f in C+, namely the complement of {x_i : i in C+, i != f} and
 * {y_j : j in C-}.
 */
inline SimplicialComplex delta_complex(const AffineOM& a) {
  const int nf = a.om.size();
  const Mask keep = a.om.ground.all() & ~bit(a.f);
  const GroundSet base = a.om.ground.restricted(keep);
  GroundSet vertices = xy_ground(base);
  const int n = base.size();
  const Mask all = vertices.all();
  std::vector<Mask> facets;
  for (const auto& c : a.om.cocircuits) {
    if (!has_bit(c.pos, a.f)) continue;
    Mask removed = 0;
    for (int i = 0, j = 0; i < nf; ++i) {
      if (i == a.f) continue;
      if (has_bit(c.pos, i)) removed |= bit(j);
      if (has_bit(c.neg, i)) removed |= bit(n + j);
      ++j;
    }
    facets.push_back(all & ~removed);
  }
  return SimplicialComplex::from_masks(std::move(vertices), std::move(facets));
}

/**
 * The lifting subdivision S(M,f) on the non-f labels: one facet
 * {i : i not in C+} per positive cocircuit C with f in C+. When no such
 * cocircuit exists, no lifting subdivision is defined.
 */
inline SimplicialComplex lifting_subdivision(const AffineOM& a) {
  const Mask keep = a.om.ground.all() & ~bit(a.f);
  GroundSet vertices = a.om.ground.restricted(keep);
  std::vector<Mask> facets;
  for (const auto& c : a.om.cocircuits) {
    if (!c.is_positive() || !has_bit(c.pos, a.f)) continue;
    facets.push_back(compress_mask(keep & ~c.pos, keep));
  }
  if (facets.empty())
    throw std::domain_error(
        "no positive cocircuit contains the distinguished element; "
        "no lifting subdivision exists");
  return SimplicialComplex::from_masks(std::move(vertices), std::move(facets));
}

inline bool is_triangulation(const AffineOM& a) {
  return structural_flags(minor(a.om, bit(a.f), Mask{0})).uniform;
}

struct Theorem1Report {
  bool ok = false;
  bool rhs_defined = false;
  std::string rhs_issue;  // empty when both sides exist
  SimplicialComplex lhs_dual;
  SimplicialComplex rhs;
};

/**
 * Checks that the Alexander dual of Delta(M,f) equals Delta of the dual
 * matroid with f reoriented. The right side needs f to be a non-loop of the
 * dual, i.e. a non-coloop of M; a violation is reported, not thrown.
 */
inline Theorem1Report theorem1_check(const AffineOM& a) {
  Theorem1Report report;
  report.lhs_dual = alexander_dual(delta_complex(a));
  if (has_bit(structural_flags(a.om).coloops, a.f)) {
    report.rhs_issue =
        "distinguished element is a coloop; the dual side is undefined";
    return report;
  }
  report.rhs_defined = true;
  const OrientedMatroid flipped = reorient(dual(a.om), bit(a.f));
  report.rhs = delta_complex(make_affine(flipped, a.f));
  report.ok = report.lhs_dual == report.rhs;
  return report;
}

struct FamilyFlags {
  bool deletion_uniform = false;     // M minus f uniform
  bool contraction_uniform = false;  // M / f uniform
  bool realized = false;
  std::vector<std::string> families;
};

/**
 * Membership in the subdivision families: S holds always; T needs M\f
 * uniform (triangulations), U needs M/f uniform (uniform Lawrence
 * polytope), R records realized provenance (regular by construction).
 * Intersection labels follow from the three flags.
 */
inline FamilyFlags classify_families(const AffineOM& a) {
  FamilyFlags flags;
  flags.deletion_uniform =
      structural_flags(minor(a.om, bit(a.f), Mask{0})).uniform;
  flags.contraction_uniform =
      structural_flags(minor(a.om, Mask{0}, bit(a.f))).uniform;
  flags.realized = a.om.provenance == Provenance::realized;
  const bool r = flags.realized;
  const bool t = flags.deletion_uniform;
  const bool u = flags.contraction_uniform;
  flags.families.push_back("S");
  if (r) flags.families.push_back("R");
  if (t) flags.families.push_back("T");
  if (u) flags.families.push_back("U");
  if (r && t) flags.families.push_back("RT");
  if (r) flags.families.push_back("RS");
  if (t && u) flags.families.push_back("TU");
  if (r && t && u) flags.families.push_back("RTU");
  return flags;
}

struct SphereBallReport {
  bool sphere_predicted = false;
  int expected_sphere_degree = 0;  // n - d - 2 with d = rank(M/f)
  bool vacuous = false;            // S is the full simplex, its dual is void
  bool homology_ok = false;
  HomologyProfile dual_profile;
};

/**
 * Sphere/ball dichotomy for the Alexander dual of the lifting subdivision:
 * the sphere case is predicted when M*\f is acyclic and M* is totally
 * cyclic, and is verified at homology level against S^{n-d-2}; the ball
 * case must be acyclic. Homotopy-level statements are not certified.
 */
inline SphereBallReport sphere_ball_check(const AffineOM& a) {
  SphereBallReport report;
  const SimplicialComplex s = lifting_subdivision(a);
  const OrientedMatroid dual_om = dual(a.om);
  report.sphere_predicted =
      structural_flags(minor(dual_om, bit(a.f), Mask{0})).acyclic &&
      structural_flags(dual_om).totally_cyclic;
  const int n = a.om.size() - 1;
  const int d = a.om.rank - 1;
  report.expected_sphere_degree = n - d - 2;
  const SimplicialComplex dual_s = alexander_dual(s);
  if (dual_s.is_void()) {
    report.vacuous = true;
    report.homology_ok = !report.sphere_predicted;
    return report;
  }
  report.dual_profile = reduced_homology(dual_s);
  if (report.sphere_predicted) {
    bool ok = true;
    for (const auto& g : report.dual_profile.groups) {
      const long long want = g.degree == report.expected_sphere_degree ? 1 : 0;
      ok = ok && g.betti == want && g.torsion.empty();
    }
    ok = ok && report.dual_profile.betti(report.expected_sphere_degree) == 1;
    report.homology_ok = ok;
  } else {
    report.homology_ok = report.dual_profile.trivial();
  }
  return report;
}

/**
 * Faces meeting {x_i, y_i} for every i, on a vertex set of the form
 * x1..xn,y1..yn. These are the full simplices of the Lawrence setting.
 */
inline std::vector<Mask> full_simplices(const SimplicialComplex& k) {
  const detail::XyLayout layout = detail::detect_xy_layout(k.vertices());
  if (!layout.present)
    throw std::invalid_argument("full_simplices needs x/y vertex labels");
  const int m = k.vertex_count() / 2;
  std::vector<Mask> out;
  for (int size = 0; size <= k.dim() + 1; ++size)
    for (Mask face : k.faces_of_size(size)) {
      bool full = true;
      for (int i = 0; i < m && full; ++i)
        if (!has_bit(face, i) && !has_bit(face, m + i)) full = false;
      if (full) out.push_back(face);
    }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Spells a sign vector the way the worked examples print cocircuits:
// x for positive, y for negative, the distinguished element by name.
inline std::vector<std::string> signed_set_spelling(const SignVector& v,
                                                    const GroundSet& g, int f) {
  std::vector<std::string> out;
  for (int i = 0; i < g.size(); ++i) {
    if (!has_bit(v.support(), i)) continue;
    if (i == f)
      out.push_back(g.label(i));
    else
      out.push_back((has_bit(v.pos, i) ? "x" : "y") + g.label(i));
  }
  return out;
}

inline nlohmann::json affine_to_json(const AffineOM& a) {
  nlohmann::json j = om_to_json(a.om);
  j["f"] = a.om.ground.label(a.f);
  return j;
}

inline AffineOM affine_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("f"))
    throw std::invalid_argument("affine OM JSON needs an \"f\" label");
  OrientedMatroid om = om_from_json(j);
  return make_affine(std::move(om), j.at("f").get<std::string>());
}

}  // namespace omdual
