#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "omdual/bits.hpp"
#include "omdual/ground.hpp"
#include "omdual/linalg.hpp"

namespace omdual {

// Basis-orientation map: a sign in {-1,0,+1} for every sorted rank-subset of
// {0,...,n-1}. Signs on unsorted tuples follow by alternation.
class Chirotope {
 public:
  Chirotope() = default;

  Chirotope(int n, int rank) : n_(n), rank_(rank) {
    if (rank < 0 || rank > n) throw std::invalid_argument("chirotope rank out of range");
    int count = 0;
    for_each_subset(n, rank, [&](Mask m) {
      index_.emplace(m, count);
      ++count;
    });
    signs_.assign(static_cast<std::size_t>(count), 0);
  }

  // Signs of the maximal minors of a full-row-rank matrix, by column subset.
  static Chirotope from_matrix(const RatMat& m) {
    const int r = static_cast<int>(m.rows());
    const int n = static_cast<int>(m.cols());
    if (::omdual::rank(m) != r)
      throw std::invalid_argument("chirotope requires a full-row-rank matrix");
    Chirotope c(n, r);
    for_each_subset(n, r, [&](Mask s) {
      RatMat sub(r, r);
      int col = 0;
      for (int i : bit_indices(s)) sub.col(col++) = m.col(i);
      c.set_sign_mask(s, sign_of(det(sub)));
    });
    return c;
  }

  int n() const { return n_; }
  int rank() const { return rank_; }

  int sign_mask(Mask s) const {
    const auto it = index_.find(s);
    if (it == index_.end())
      throw std::invalid_argument("chirotope sign query with wrong subset size");
    return signs_[static_cast<std::size_t>(it->second)];
  }

  void set_sign_mask(Mask s, int sgn) {
    const auto it = index_.find(s);
    if (it == index_.end())
      throw std::invalid_argument("chirotope sign assignment with wrong subset size");
    signs_[static_cast<std::size_t>(it->second)] = static_cast<std::int8_t>(sgn);
  }

  // Sign of an arbitrary element sequence: alternating in the entries, zero on
  // repeats.
  int sign_tuple(const std::vector<int>& t) const {
    if (static_cast<int>(t.size()) != rank_)
      throw std::invalid_argument("chirotope tuple of wrong length");
    int swaps = 0;
    Mask m = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (has_bit(m, t[i])) return 0;
      m |= bit(t[i]);
      for (std::size_t j = i + 1; j < t.size(); ++j)
        if (t[j] < t[i]) ++swaps;
    }
    const int base = sign_mask(m);
    return (swaps % 2 == 0) ? base : -base;
  }

  bool identically_zero() const {
    return std::all_of(signs_.begin(), signs_.end(),
                       [](std::int8_t s) { return s == 0; });
  }

  bool independent(Mask s) const {
    if (popcount(s) > rank_) return false;
    const std::vector<int> rest = bit_indices(full_mask(n_) & ~s);
    bool found = false;
    for_each_subset(static_cast<int>(rest.size()), rank_ - popcount(s), [&](Mask t) {
      if (found) return;
      Mask ext = s;
      for (int i : bit_indices(t)) ext |= bit(rest[static_cast<std::size_t>(i)]);
      if (sign_mask(ext) != 0) found = true;
    });
    return found;
  }

  Mask max_independent_subset(Mask s) const {
    Mask ind = 0;
    for (int e : bit_indices(s))
      if (independent(ind | bit(e))) ind |= bit(e);
    return ind;
  }

  int rank_of(Mask s) const { return popcount(max_independent_subset(s)); }

  // Fixed dual convention: chi*(Y) = chi(E minus Y) times the sign of the
  // permutation sorting the concatenation (Y, E minus Y) against ground order.
  Chirotope dual() const {
    Chirotope d(n_, n_ - rank_);
    for_each_subset(n_, n_ - rank_, [&](Mask y) {
      const Mask comp = full_mask(n_) & ~y;
      int inversions = 0;
      for (int a : bit_indices(y)) inversions += popcount(comp & (bit(a) - 1));
      const int s = sign_mask_of(comp);
      d.set_sign_mask(y, (inversions % 2 == 0) ? s : -s);
    });
    return d;
  }

  // Multiplies the sign of each basis T by (-1)^|S .. T|.
  Chirotope reoriented(Mask s) const {
    Chirotope out = *this;
    for_each_subset(n_, rank_, [&](Mask t) {
      if (popcount(t & s) % 2 != 0) out.set_sign_mask(t, -out.sign_mask(t));
    });
    return out;
  }

  // Contraction by an arbitrary set: contract a maximal independent subset I
  // of c, then drop the rest of c (loops after the contraction).
  Chirotope contracted(Mask c) const {
    const Mask ind = max_independent_subset(c);
    const std::vector<int> ind_elems = bit_indices(ind);
    const Mask keep = full_mask(n_) & ~c;
    const std::vector<int> keep_elems = bit_indices(keep);
    const int nn = static_cast<int>(keep_elems.size());
    const int rr = rank_ - static_cast<int>(ind_elems.size());
    Chirotope out(nn, rr);
    for_each_subset(nn, rr, [&](Mask s) {
      std::vector<int> tuple;
      tuple.reserve(static_cast<std::size_t>(rank_));
      for (int i : bit_indices(s)) tuple.push_back(keep_elems[static_cast<std::size_t>(i)]);
      tuple.insert(tuple.end(), ind_elems.begin(), ind_elems.end());
      out.set_sign_mask(s, sign_tuple(tuple));
    });
    return out;
  }

  // Deletion via duality: M minus d = (M* / d)*.
  Chirotope deleted(Mask d) const { return dual().contracted(d).dual(); }

  bool same_up_to_global_sign(const Chirotope& o) const {
    if (n_ != o.n_ || rank_ != o.rank_) return false;
    if (signs_ == o.signs_) return true;
    for (std::size_t i = 0; i < signs_.size(); ++i)
      if (signs_[i] != -o.signs_[i]) return false;
    return true;
  }

  bool operator==(const Chirotope& o) const {
    return n_ == o.n_ && rank_ == o.rank_ && signs_ == o.signs_;
  }

 private:
  int sign_mask_of(Mask s) const { return sign_mask(s); }

  int n_ = 0;
  int rank_ = 0;
  std::vector<std::int8_t> signs_;
  std::unordered_map<Mask, int> index_;
};

// Text form: rank line, label line, then one "lab ... lab: s" line per sorted
// rank-subset with s one of + - 0.
inline std::string chirotope_to_text(const Chirotope& c, const GroundSet& g) {
  if (g.size() != c.n())
    throw std::invalid_argument("ground set size does not match chirotope");
  std::ostringstream out;
  out << "rank " << c.rank() << "\n";
  out << "ground";
  for (const auto& l : g.labels()) out << " " << l;
  out << "\n";
  std::vector<Mask> subsets;
  for_each_subset(c.n(), c.rank(), [&](Mask m) { subsets.push_back(m); });
  std::sort(subsets.begin(), subsets.end(), lex_less);
  for (Mask s : subsets) {
    bool first = true;
    for (int i : bit_indices(s)) {
      if (!first) out << " ";
      out << g.label(i);
      first = false;
    }
    const int sg = c.sign_mask(s);
    out << ": " << (sg > 0 ? "+" : sg < 0 ? "-" : "0") << "\n";
  }
  return out.str();
}

struct ParsedChirotope {
  Chirotope chi;
  GroundSet ground;
};

inline ParsedChirotope chirotope_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  int rank = -1;
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> word)) continue;
    if (word == "rank") {
      if (!(ls >> rank) || rank < 0)
        throw std::invalid_argument("chirotope text: bad rank line");
    } else if (word == "ground") {
      std::string lab;
      while (ls >> lab) labels.push_back(lab);
      break;
    } else {
      throw std::invalid_argument("chirotope text: expected rank/ground header");
    }
  }
  if (rank < 0 || labels.empty())
    throw std::invalid_argument("chirotope text: missing rank or ground line");
  GroundSet g(labels);
  Chirotope c(g.size(), rank);
  std::unordered_set<Mask> seen;
  int assigned = 0;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    const auto colon = trimmed.find(':');
    if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos)
      throw std::invalid_argument("chirotope text: missing ':' in line " + line);
    std::istringstream left(trimmed.substr(0, colon));
    Mask m = 0;
    std::string lab;
    while (left >> lab) m |= bit(g.index_checked(lab));
    if (popcount(m) != rank)
      throw std::invalid_argument("chirotope text: subset of wrong size in line " + line);
    std::istringstream right(trimmed.substr(colon + 1));
    std::string sgn;
    if (!(right >> sgn) || (sgn != "+" && sgn != "-" && sgn != "0"))
      throw std::invalid_argument("chirotope text: bad sign in line " + line);
    if (!seen.insert(m).second)
      throw std::invalid_argument("chirotope text: repeated subset in line " + line);
    ++assigned;
    c.set_sign_mask(m, sgn == "+" ? 1 : sgn == "-" ? -1 : 0);
  }
  int expected = 0;
  for_each_subset(g.size(), rank, [&](Mask) { ++expected; });
  if (assigned != expected)
    throw std::invalid_argument("chirotope text: not every subset assigned a sign");
  if (c.identically_zero())
    throw std::invalid_argument("chirotope text: identically zero");
  return {std::move(c), std::move(g)};
}

}  // namespace omdual
