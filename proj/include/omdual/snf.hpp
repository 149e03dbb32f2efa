#pragma once

#include <cstdlib>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "omdual/rational.hpp"

namespace omdual {

// Sparse integer matrix used as input to smith_normal_form. Boundary maps of
// simplicial complexes are built directly in this form.
class SparseIntMat {
 public:
  SparseIntMat(int rows, int cols) : nrows_(rows), ncols_(cols) {}

  int rows() const { return nrows_; }
  int cols() const { return ncols_; }

  void add(int r, int c, Integer v) {
    if (r < 0 || r >= nrows_ || c < 0 || c >= ncols_)
      throw std::out_of_range("SparseIntMat::add: index out of range");
    if (v == 0) return;
    entries_.emplace_back(r, c, std::move(v));
  }

  const std::vector<std::tuple<int, int, Integer>>& entries() const {
    return entries_;
  }

 private:
  int nrows_, ncols_;
  std::vector<std::tuple<int, int, Integer>> entries_;
};

namespace detail {

// Elimination to Smith normal form. Magnitude-one pivots are drained first
// in Markowitz order (least fill), each contributing an invariant factor of
// one; the remainder is handled by smallest-magnitude pivoting with repeated
// division. Before a non-unit pivot is retired, divisibility of the
// remaining entries is enforced so the recorded factors form a chain
// d1 | d2 | ...
class SnfWorker {
 public:
  SnfWorker(int nrows, int ncols, const SparseIntMat& m)
      : rows_(nrows), cols_(ncols) {
    for (const auto& [r, c, v] : m.entries()) {
      auto it = rows_[r].find(c);
      if (it == rows_[r].end()) {
        if (v != 0) {
          rows_[r].emplace(c, v);
          cols_[c].insert(r);
        }
      } else {
        it->second += v;
        if (it->second == 0) {
          rows_[r].erase(it);
          cols_[c].erase(r);
        }
      }
    }
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r])
        if (v == 1 || v == -1) push_unit(static_cast<int>(r), c);
  }

  std::vector<Integer> run() {
    drain_units();
    while (true) {
      auto [r, c] = smallest_entry();
      if (r < 0) break;
      reduce_and_retire(r, c);
      drain_units();
    }
    return std::move(factors_);
  }

 private:
  const Integer* find(int r, int c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? nullptr : &it->second;
  }

  void set_entry(int r, int c, const Integer& v) {
    auto it = rows_[r].find(c);
    if (v == 0) {
      if (it != rows_[r].end()) {
        rows_[r].erase(it);
        cols_[c].erase(r);
      }
      return;
    }
    if (it == rows_[r].end()) {
      rows_[r].emplace(c, v);
      cols_[c].insert(r);
    } else {
      it->second = v;
    }
    if (v == 1 || v == -1) push_unit(r, c);
  }

  // row dst -= q * row src
  void row_axpy(int dst, int src, const Integer& q) {
    for (const auto& [c, v] : rows_[src]) {
      const Integer* cur = find(dst, c);
      Integer nv = -q * v;
      if (cur) nv += *cur;
      set_entry(dst, c, nv);
    }
  }

  long long fill_cost(int r, int c) const {
    return (static_cast<long long>(rows_[r].size()) - 1) *
           (static_cast<long long>(cols_[c].size()) - 1);
  }

  void push_unit(int r, int c) { units_.emplace(fill_cost(r, c), r, c); }

  // Stale queue entries are discarded on pop; entries whose fill cost grew
  // since they were pushed are reinserted with the current cost.
  void drain_units() {
    while (!units_.empty()) {
      const auto [cost, r, c] = units_.top();
      units_.pop();
      const Integer* v = find(r, c);
      if (!v || (*v != 1 && *v != -1)) continue;
      const long long cur = fill_cost(r, c);
      if (cur > cost) {
        units_.emplace(cur, r, c);
        continue;
      }
      eliminate_unit(r, c);
    }
  }

  // A unit pivot clears its column with row operations; the leftover row
  // entries would be cleared by column operations that touch no other row,
  // so the pivot row is simply dropped.
  void eliminate_unit(int r, int c) {
    const Integer p = *find(r, c);
    const std::vector<int> touched(cols_[c].begin(), cols_[c].end());
    for (int i : touched) {
      if (i == r) continue;
      const Integer q = *find(i, c) * p;
      row_axpy(i, r, q);
    }
    for (const auto& [j, v] : rows_[r]) cols_[j].erase(r);
    rows_[r].clear();
    factors_.push_back(1);
  }

  std::pair<int, int> smallest_entry() const {
    std::pair<int, int> best{-1, -1};
    Integer best_abs = 0;
    long long best_cost = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        Integer a = abs(v);
        const long long cost = fill_cost(static_cast<int>(r), c);
        if (best.first < 0 || a < best_abs ||
            (a == best_abs && cost < best_cost)) {
          best = {static_cast<int>(r), c};
          best_abs = std::move(a);
          best_cost = cost;
        }
      }
    }
    return best;
  }

  void reduce_and_retire(int r, int c) {
    while (true) {
      // Clear column c with row operations; a nonzero remainder yields a
      // smaller pivot and restarts the pass.
      bool moved = false;
      while (true) {
        int other = -1;
        for (int i : cols_[c]) {
          if (i != r) {
            other = i;
            break;
          }
        }
        if (other < 0) break;
        const Integer p = *find(r, c);
        const Integer a = *find(other, c);
        const Integer q = a / p;
        if (q != 0) row_axpy(other, r, q);
        if (find(other, c)) {
          r = other;
          moved = true;
          break;
        }
      }
      if (moved) continue;

      // Column ops to clear row r. Column c now has a single entry, so each
      // operation only touches row r itself.
      bool row_dirty = false;
      {
        std::vector<std::pair<int, Integer>> snapshot(rows_[r].begin(),
                                                      rows_[r].end());
        for (const auto& [j, v] : snapshot) {
          if (j == c) continue;
          const Integer p = *find(r, c);
          const Integer q = v / p;
          set_entry(r, j, v - q * p);
          if (find(r, j)) {
            c = j;
            row_dirty = true;
            break;
          }
        }
      }
      if (row_dirty) continue;

      Integer p = *find(r, c);
      if (p < 0) p = -p;
      if (p != 1) {
        // Enforce the divisibility chain: fold in a row containing an entry
        // the pivot does not divide, then keep reducing.
        bool folded = false;
        for (std::size_t i = 0; i < rows_.size() && !folded; ++i) {
          if (static_cast<int>(i) == r) continue;
          for (const auto& [j, v] : rows_[i]) {
            if (v % p != 0) {
              row_axpy(r, static_cast<int>(i), Integer(-1));
              folded = true;
              break;
            }
          }
        }
        if (folded) continue;
      }
      factors_.push_back(p);
      for (const auto& [j, v] : rows_[r]) cols_[j].erase(r);
      rows_[r].clear();
      return;
    }
  }

  std::vector<std::unordered_map<int, Integer>> rows_;
  std::vector<std::unordered_set<int>> cols_;
  std::priority_queue<std::tuple<long long, int, int>,
                      std::vector<std::tuple<long long, int, int>>,
                      std::greater<>>
      units_;
  std::vector<Integer> factors_;
};

}  // namespace detail

/**
 * Invariant factors d1 | d2 | ... | dr of an integer matrix, each positive;
 * r is the rank. Zero blocks contribute nothing.
 */
inline std::vector<Integer> smith_normal_form(const SparseIntMat& m) {
  detail::SnfWorker w(m.rows(), m.cols(), m);
  return w.run();
}

inline std::vector<Integer> smith_normal_form(const RatMat& m) {
  SparseIntMat s(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (!is_integer(m(i, j)))
        throw std::domain_error("smith_normal_form: entry (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ") = " + to_string(m(i, j)) +
                                " is not an integer");
      s.add(static_cast<int>(i), static_cast<int>(j), numerator(m(i, j)));
    }
  }
  return smith_normal_form(s);
}

}  // namespace omdual
