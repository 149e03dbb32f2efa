#pragma once

#include <algorithm>
#include <json.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "omdual/chirotope.hpp"
#include "omdual/ground.hpp"
#include "omdual/linalg.hpp"
#include "omdual/sign_vector.hpp"

namespace omdual {

enum class Provenance { realized, chirotope_given };

struct OrientedMatroid {
  GroundSet ground;
  int rank = 0;
  std::vector<SignVector> circuits;    // canonical order, closed under negation
  std::vector<SignVector> cocircuits;  // canonical order, closed under negation
  std::optional<Chirotope> chi;
  std::optional<RatMat> realization;   // row-reduced, rank many rows
  Provenance provenance = Provenance::realized;

  int size() const { return ground.size(); }
};

namespace detail {

inline std::vector<SignVector> canonical_signed_family(std::vector<SignVector> family) {
  std::vector<SignVector> out;
  out.reserve(family.size() * 2);
  for (const auto& v : family) {
    if (v.is_zero()) continue;
    out.push_back(v);
    out.push_back(v.negated());
  }
  std::sort(out.begin(), out.end(), sv_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Support-minimal nonzero sign vectors of the row space of a full-row-rank
// matrix: one pair per column subset of size rank-1 spanning a hyperplane.
inline std::vector<SignVector> row_space_cocircuits(const RatMat& m) {
  const int r = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  std::map<Mask, SignVector> by_support;
  if (r > 0) {
    for_each_subset(n, r - 1, [&](Mask h) {
      RatMat sub(r, r - 1);
      int col = 0;
      for (int i : bit_indices(h)) sub.col(col++) = m.col(i);
      const RatMat left = kernel_basis(RatMat(sub.transpose()));
      if (left.rows() != 1) return;
      const RatMat u = left * m;
      SignVector v;
      for (int i = 0; i < n; ++i) {
        const int s = sign_of(u(0, i));
        if (s > 0) v.pos |= bit(i);
        if (s < 0) v.neg |= bit(i);
      }
      by_support.emplace(v.support(), v);
    });
  }
  std::vector<SignVector> out;
  for (const auto& [sup, v] : by_support) out.push_back(v);
  return canonical_signed_family(std::move(out));
}

// Circuit rule over (rank+1)-subsets T = {t_0 < ... < t_r}:
// X(t_i) = (-1)^i chi(T minus t_i).
inline std::vector<SignVector> circuits_from_chirotope(const Chirotope& c) {
  const int n = c.n();
  const int r = c.rank();
  std::map<Mask, SignVector> by_support;
  for_each_subset(n, r + 1, [&](Mask t) {
    const std::vector<int> elems = bit_indices(t);
    SignVector v;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      int s = c.sign_mask(t & ~bit(elems[i]));
      if (i % 2 != 0) s = -s;
      if (s > 0) v.pos |= bit(elems[i]);
      if (s < 0) v.neg |= bit(elems[i]);
    }
    if (v.is_zero()) return;
    by_support.emplace(v.support(), v);
  });
  std::vector<SignVector> out;
  for (const auto& [sup, v] : by_support) out.push_back(v);
  return canonical_signed_family(std::move(out));
}

inline void check_orthogonality(const OrientedMatroid& om) {
  for (const auto& x : om.circuits)
    for (const auto& y : om.cocircuits)
      if (!orthogonal(x, y))
        throw std::invalid_argument(
            "circuit/cocircuit orthogonality fails; input is not an oriented matroid");
}

// Rank from circuits by the greedy independence scan; a set is independent
// iff it contains no circuit support.
inline int rank_from_circuits(int n, const std::vector<SignVector>& circuits) {
  Mask ind = 0;
  auto independent = [&](Mask s) {
    for (const auto& c : circuits)
      if ((c.support() & ~s) == 0) return false;
    return true;
  };
  for (int e = 0; e < n; ++e)
    if (independent(ind | bit(e))) ind |= bit(e);
  return popcount(ind);
}

inline std::vector<SignVector> minimal_nonzero_restrictions(
    const std::vector<SignVector>& family, Mask avoid, Mask keep) {
  std::vector<SignVector> restricted;
  for (const auto& v : family) {
    if (v.support() & avoid) continue;
    const SignVector r = v.restricted(keep);
    if (!r.is_zero()) restricted.push_back(r);
  }
  std::vector<SignVector> out;
  for (const auto& v : restricted) {
    bool minimal = true;
    for (const auto& w : restricted) {
      const Mask ws = w.support();
      if (ws != v.support() && (ws & ~v.support()) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  return canonical_signed_family(std::move(out));
}

}  // namespace detail

inline OrientedMatroid om_from_matrix(const RatMat& m, GroundSet ground = {}) {
  if (ground.size() == 0) ground = GroundSet::numbered(static_cast<int>(m.cols()));
  if (ground.size() != static_cast<int>(m.cols()))
    throw std::invalid_argument("ground set size does not match matrix columns");
  OrientedMatroid om;
  om.ground = std::move(ground);
  const RatMat reduced = row_space_basis(m);
  om.rank = static_cast<int>(reduced.rows());
  om.realization = reduced;
  // Basis signs follow the input matrix itself whenever it is a valid
  // realization; the row-reduced copy may differ by a global sign.
  om.chi = Chirotope::from_matrix(om.rank == m.rows() ? m : reduced);
  om.cocircuits = detail::row_space_cocircuits(reduced);
  om.circuits = detail::row_space_cocircuits(kernel_basis(reduced));
  om.provenance = Provenance::realized;
  return om;
}

inline OrientedMatroid om_from_chirotope(const Chirotope& c, GroundSet ground = {}) {
  if (ground.size() == 0) ground = GroundSet::numbered(c.n());
  if (ground.size() != c.n())
    throw std::invalid_argument("ground set size does not match chirotope");
  if (c.identically_zero())
    throw std::invalid_argument("chirotope is identically zero");
  OrientedMatroid om;
  om.ground = std::move(ground);
  om.rank = c.rank();
  om.chi = c;
  om.circuits = detail::circuits_from_chirotope(c);
  om.cocircuits = detail::circuits_from_chirotope(c.dual());
  om.provenance = Provenance::chirotope_given;
  detail::check_orthogonality(om);
  return om;
}

// From explicit circuit and cocircuit families (e.g. parsed JSON). Checks
// closure under negation is restored, orthogonality, and rank consistency.
inline OrientedMatroid om_from_sign_vectors(GroundSet ground,
                                            std::vector<SignVector> circuits,
                                            std::vector<SignVector> cocircuits,
                                            std::optional<int> declared_rank = {}) {
  OrientedMatroid om;
  om.rank = detail::rank_from_circuits(ground.size(), circuits);
  om.ground = std::move(ground);
  om.circuits = detail::canonical_signed_family(std::move(circuits));
  om.cocircuits = detail::canonical_signed_family(std::move(cocircuits));
  om.provenance = Provenance::chirotope_given;
  if (declared_rank && *declared_rank != om.rank)
    throw std::invalid_argument("declared rank disagrees with the circuit family");
  const int corank = detail::rank_from_circuits(om.size(), om.cocircuits);
  if (om.rank + corank != om.size())
    throw std::invalid_argument("circuit and cocircuit families disagree on rank");
  detail::check_orthogonality(om);
  return om;
}

inline bool same_om(const OrientedMatroid& a, const OrientedMatroid& b) {
  return a.ground == b.ground && a.rank == b.rank && a.circuits == b.circuits &&
         a.cocircuits == b.cocircuits;
}

inline OrientedMatroid dual(const OrientedMatroid& om) {
  OrientedMatroid d;
  d.ground = om.ground;
  d.rank = om.size() - om.rank;
  d.circuits = om.cocircuits;
  d.cocircuits = om.circuits;
  if (om.chi) d.chi = om.chi->dual();
  if (om.realization) d.realization = kernel_basis(*om.realization);
  d.provenance = om.provenance;
  return d;
}

inline OrientedMatroid reorient(const OrientedMatroid& om, Mask s) {
  if (s & ~om.ground.all())
    throw std::invalid_argument("reorientation set outside the ground set");
  OrientedMatroid out = om;
  for (auto& v : out.circuits) v = v.reoriented(s);
  for (auto& v : out.cocircuits) v = v.reoriented(s);
  std::sort(out.circuits.begin(), out.circuits.end(), sv_less);
  std::sort(out.cocircuits.begin(), out.cocircuits.end(), sv_less);
  if (out.chi) out.chi = out.chi->reoriented(s);
  if (out.realization)
    for (int i : bit_indices(s)) out.realization->col(i) = -out.realization->col(i);
  return out;
}

inline OrientedMatroid reorient(const OrientedMatroid& om,
                                const std::vector<std::string>& labels) {
  return reorient(om, om.ground.mask_of(labels));
}

// Deletion of del and contraction of con, in either order.
inline OrientedMatroid minor(const OrientedMatroid& om, Mask del, Mask con) {
  if (del & con) throw std::invalid_argument("deletion and contraction sets overlap");
  if ((del | con) & ~om.ground.all())
    throw std::invalid_argument("minor sets outside the ground set");
  const Mask keep = om.ground.all() & ~(del | con);
  const GroundSet g = om.ground.restricted(keep);

  if (om.provenance == Provenance::realized && om.realization) {
    RatMat m = *om.realization;
    const int r = static_cast<int>(m.rows());
    std::vector<bool> used(static_cast<std::size_t>(r), false);
    for (int c : bit_indices(con)) {
      int pivot = -1;
      for (int i = 0; i < r; ++i)
        if (!used[static_cast<std::size_t>(i)] && m(i, c) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      used[static_cast<std::size_t>(pivot)] = true;
      for (int i = 0; i < r; ++i) {
        if (i == pivot || m(i, c) == 0) continue;
        m.row(i) -= (m(i, c) / m(pivot, c)) * m.row(pivot);
      }
    }
    const std::vector<int> cols = bit_indices(keep);
    std::vector<int> rows;
    for (int i = 0; i < r; ++i)
      if (!used[static_cast<std::size_t>(i)]) rows.push_back(i);
    RatMat out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            m(rows[i], cols[j]);
    return om_from_matrix(out, g);
  }

  if (om.chi) {
    const Chirotope contracted = om.chi->contracted(con);
    const Chirotope result = contracted.deleted(compress_mask(del, om.ground.all() & ~con));
    return om_from_chirotope(result, g);
  }

  OrientedMatroid out;
  out.ground = g;
  out.circuits = detail::minimal_nonzero_restrictions(om.circuits, del, keep);
  out.cocircuits = detail::minimal_nonzero_restrictions(om.cocircuits, con, keep);
  out.rank = detail::rank_from_circuits(g.size(), out.circuits);
  out.provenance = om.provenance;
  return out;
}

inline OrientedMatroid minor(const OrientedMatroid& om,
                             const std::vector<std::string>& del,
                             const std::vector<std::string>& con) {
  return minor(om, om.ground.mask_of(del), om.ground.mask_of(con));
}

struct StructuralFlags {
  bool uniform = false;
  Mask loops = 0;
  Mask coloops = 0;
  bool acyclic = false;
  bool totally_cyclic = false;
};

inline StructuralFlags structural_flags(const OrientedMatroid& om) {
  StructuralFlags f;
  f.uniform = true;
  Mask in_some_circuit = 0;
  for (const auto& c : om.circuits) {
    in_some_circuit |= c.support();
    if (popcount(c.support()) != om.rank + 1) f.uniform = false;
    if (popcount(c.support()) == 1) f.loops |= c.support();
  }
  f.coloops = om.ground.all() & ~in_some_circuit;
  f.acyclic = std::none_of(om.circuits.begin(), om.circuits.end(),
                           [](const SignVector& v) { return v.is_positive(); });
  f.totally_cyclic = std::none_of(om.cocircuits.begin(), om.cocircuits.end(),
                                  [](const SignVector& v) { return v.is_positive(); });
  return f;
}

// Closure of the cocircuits and the zero vector under composition.
inline std::vector<SignVector> covectors(const OrientedMatroid& om) {
  struct Hash {
    std::size_t operator()(const SignVector& v) const {
      return std::hash<Mask>{}(v.pos) * 1000003u ^ std::hash<Mask>{}(v.neg);
    }
  };
  std::unordered_set<SignVector, Hash> seen;
  std::vector<SignVector> queue{SignVector{}};
  seen.insert(SignVector{});
  while (!queue.empty()) {
    const SignVector v = queue.back();
    queue.pop_back();
    for (const auto& c : om.cocircuits) {
      const SignVector w = compose(v, c);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<SignVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), sv_less);
  return out;
}

// Four-colour partition of the ground set with a marked element e in B or W.
struct Painting {
  Mask black = 0;
  Mask white = 0;
  Mask green = 0;
  Mask red = 0;
  int e = 0;
};

inline void validate_painting(const OrientedMatroid& om, const Painting& p) {
  const Mask all = om.ground.all();
  if ((p.black | p.white | p.green | p.red) != all ||
      (p.black & p.white) || (p.black & p.green) || (p.black & p.red) ||
      (p.white & p.green) || (p.white & p.red) || (p.green & p.red))
    throw std::invalid_argument("painting is not a partition of the ground set");
  if (!has_bit(p.black | p.white, p.e))
    throw std::invalid_argument("marked element must be black or white");
}

// Case (1): a circuit X through e with X+ within B or G, X- within W or G.
// Case (2): a cocircuit Y through e with Y+ within B or R, Y- within W or R.
// The sign of e in a witness is forced by its colour: positive when black,
// negative when white.
inline std::pair<bool, bool> painting_cases(const OrientedMatroid& om, const Painting& p) {
  bool circuit_case = false;
  bool cocircuit_case = false;
  const Mask bg = p.black | p.green;
  const Mask wg = p.white | p.green;
  for (const auto& x : om.circuits)
    if (has_bit(x.support(), p.e) && (x.pos & ~bg) == 0 && (x.neg & ~wg) == 0) {
      circuit_case = true;
      break;
    }
  const Mask br = p.black | p.red;
  const Mask wr = p.white | p.red;
  for (const auto& y : om.cocircuits)
    if (has_bit(y.support(), p.e) && (y.pos & ~br) == 0 && (y.neg & ~wr) == 0) {
      cocircuit_case = true;
      break;
    }
  return {circuit_case, cocircuit_case};
}

struct PaintingWitness {
  bool is_circuit = false;  // else cocircuit
  SignVector witness;
};

inline PaintingWitness four_painting_witness(const OrientedMatroid& om, const Painting& p) {
  validate_painting(om, p);
  const Mask bg = p.black | p.green;
  const Mask wg = p.white | p.green;
  for (const auto& x : om.circuits)
    if (has_bit(x.support(), p.e) && (x.pos & ~bg) == 0 && (x.neg & ~wg) == 0)
      return {true, x};
  const Mask br = p.black | p.red;
  const Mask wr = p.white | p.red;
  for (const auto& y : om.cocircuits)
    if (has_bit(y.support(), p.e) && (y.pos & ~br) == 0 && (y.neg & ~wr) == 0)
      return {false, y};
  throw std::logic_error("painting dichotomy violated: no witness of either kind");
}

inline nlohmann::json om_to_json(const OrientedMatroid& om) {
  nlohmann::json j;
  j["ground"] = om.ground.labels();
  j["rank"] = om.rank;
  nlohmann::json circuits = nlohmann::json::array();
  for (const auto& c : om.circuits) circuits.push_back(sign_vector_to_json(c, om.ground));
  nlohmann::json cocircuits = nlohmann::json::array();
  for (const auto& c : om.cocircuits) cocircuits.push_back(sign_vector_to_json(c, om.ground));
  j["circuits"] = std::move(circuits);
  j["cocircuits"] = std::move(cocircuits);
  return j;
}

inline OrientedMatroid om_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("circuits") ||
      !j.contains("cocircuits"))
    throw std::invalid_argument(
        "oriented matroid JSON needs \"ground\", \"circuits\" and \"cocircuits\"");
  GroundSet g(j.at("ground").get<std::vector<std::string>>());
  std::vector<SignVector> circuits;
  for (const auto& c : j.at("circuits")) circuits.push_back(sign_vector_from_json(c, g));
  std::vector<SignVector> cocircuits;
  for (const auto& c : j.at("cocircuits")) cocircuits.push_back(sign_vector_from_json(c, g));
  std::optional<int> rank;
  if (j.contains("rank")) rank = j.at("rank").get<int>();
  return om_from_sign_vectors(std::move(g), std::move(circuits), std::move(cocircuits), rank);
}

}  // namespace omdual
