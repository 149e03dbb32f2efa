#pragma once

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "omdual/simplicial_complex.hpp"
#include "omdual/snf.hpp"

namespace omdual {

struct DegreeHomology {
  int degree = 0;
  long long betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, sorted
};

struct HomologyProfile {
  std::vector<DegreeHomology> groups;  // consecutive degrees, lowest first

  bool trivial() const {
    for (const auto& g : groups)
      if (g.betti != 0 || !g.torsion.empty()) return false;
    return true;
  }

  long long betti(int degree) const {
    for (const auto& g : groups)
      if (g.degree == degree) return g.betti;
    return 0;
  }

  std::vector<Integer> torsion(int degree) const {
    for (const auto& g : groups)
      if (g.degree == degree) return g.torsion;
    return {};
  }
};

namespace detail {

// Boundary of the augmented chain complex: level s holds the faces with s
// vertices (level 0 is the empty face), and boundary_s maps level s+1 to
// level s by dropping one vertex with sign (-1)^position. Face lists are
// lexicographically sorted, which fixes every matrix entry.
struct ChainData {
  std::vector<std::vector<Mask>> levels;
  std::vector<SparseIntMat> boundaries;  // boundaries[s]: level s+1 -> level s
};

inline ChainData chain_data(const SimplicialComplex& k) {
  if (k.is_void())
    throw std::domain_error("homology of the void complex is undefined");
  ChainData data;
  const int top = k.dim() + 1;
  for (int s = 0; s <= top; ++s) data.levels.push_back(k.faces_of_size(s));
  for (int s = 0; s + 1 <= top; ++s) {
    const auto& rows = data.levels[static_cast<std::size_t>(s)];
    const auto& cols = data.levels[static_cast<std::size_t>(s + 1)];
    std::unordered_map<Mask, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
      row_index.emplace(rows[i], static_cast<int>(i));
    SparseIntMat b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const std::vector<int> verts = bit_indices(cols[j]);
      for (std::size_t p = 0; p < verts.size(); ++p) {
        const Mask sub = cols[j] & ~bit(verts[p]);
        b.add(row_index.at(sub), static_cast<int>(j), (p % 2 == 0) ? 1 : -1);
      }
    }
    data.boundaries.push_back(std::move(b));
  }
  return data;
}

inline SparseIntMat transposed(const SparseIntMat& m) {
  SparseIntMat t(m.cols(), m.rows());
  for (const auto& [r, c, v] : m.entries()) t.add(c, r, v);
  return t;
}

inline std::vector<Integer> torsion_of(const std::vector<Integer>& factors) {
  std::vector<Integer> t;
  for (const Integer& d : factors)
    if (d > 1) t.push_back(d);
  std::sort(t.begin(), t.end());
  return t;
}

inline HomologyProfile profile_from_snf(const ChainData& data,
                                        const std::vector<std::vector<Integer>>& snf,
                                        bool cohomology) {
  const int top = static_cast<int>(data.levels.size()) - 1;  // faces up to size top
  std::vector<long long> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int s = 0; s < top; ++s)
    rank[static_cast<std::size_t>(s)] =
        static_cast<long long>(snf[static_cast<std::size_t>(s)].size());
  HomologyProfile profile;
  for (int s = 0; s <= top; ++s) {
    DegreeHomology g;
    g.degree = s - 1;
    const long long faces =
        static_cast<long long>(data.levels[static_cast<std::size_t>(s)].size());
    const long long below = s > 0 ? rank[static_cast<std::size_t>(s - 1)] : 0;
    const long long above = s < top ? rank[static_cast<std::size_t>(s)] : 0;
    g.betti = faces - below - above;
    // Homology in degree s-1 takes torsion from the boundary arriving from
    // above; cohomology takes it from the coboundary arriving from below.
    if (cohomology) {
      if (s > 0) g.torsion = torsion_of(snf[static_cast<std::size_t>(s - 1)]);
    } else {
      if (s < top) g.torsion = torsion_of(snf[static_cast<std::size_t>(s)]);
    }
    profile.groups.push_back(std::move(g));
  }
  return profile;
}

}  // namespace detail

/**
 * Reduced integer homology in every degree -1..dim, computed from Smith
 * normal forms of the augmented boundary matrices. The void complex has no
 * augmentation and is rejected.
 */
inline HomologyProfile reduced_homology(const SimplicialComplex& k) {
  const detail::ChainData data = detail::chain_data(k);
  std::vector<std::vector<Integer>> snf;
  for (const auto& b : data.boundaries) snf.push_back(smith_normal_form(b));
  return detail::profile_from_snf(data, snf, false);
}

/**
 * Reduced integer cohomology in every degree -1..dim, computed from the
 * transposed boundary matrices.
 */
inline HomologyProfile reduced_cohomology(const SimplicialComplex& k) {
  const detail::ChainData data = detail::chain_data(k);
  std::vector<std::vector<Integer>> snf;
  for (const auto& b : data.boundaries)
    snf.push_back(smith_normal_form(detail::transposed(b)));
  return detail::profile_from_snf(data, snf, true);
}

struct DualityRow {
  int degree = 0;       // degree i on the primal side
  int dual_degree = 0;  // |V| - 3 - i on the dual side
  long long betti_primal = 0;
  long long betti_dual = 0;
  std::vector<Integer> torsion_primal;
  std::vector<Integer> torsion_dual;
  bool ok = false;
};

struct DualityReport {
  bool ok = true;
  std::vector<DualityRow> rows;
};

/**
 * Checks H~_i(K) = H~^{|V|-3-i}(K^dual) as abelian groups for every degree,
 * comparing Betti numbers and torsion multisets. A void dual (K the full
 * simplex) contributes zero groups in all degrees.
 */
inline DualityReport alexander_duality_check(const SimplicialComplex& k) {
  if (k.is_void())
    throw std::domain_error("duality check needs a non-void complex");
  const int n = k.vertex_count();
  const HomologyProfile hk = reduced_homology(k);
  const SimplicialComplex dual = alexander_dual(k);
  HomologyProfile hd;  // stays empty (all groups zero) when the dual is void
  if (!dual.is_void()) hd = reduced_cohomology(dual);
  DualityReport report;
  for (int i = -1; i <= n - 2; ++i) {
    DualityRow row;
    row.degree = i;
    row.dual_degree = n - 3 - i;
    row.betti_primal = hk.betti(i);
    row.betti_dual = hd.betti(row.dual_degree);
    row.torsion_primal = hk.torsion(i);
    row.torsion_dual = hd.torsion(row.dual_degree);
    row.ok = row.betti_primal == row.betti_dual &&
             row.torsion_primal == row.torsion_dual;
    report.ok = report.ok && row.ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace omdual
