#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "omdual/rational.hpp"

namespace omdual {

/**
 * Exact determinant.
 *
 * Row denominators are cleared first, then a fraction-free Bareiss
 * elimination runs over the integers; every division in the sweep is exact.
 */
template <typename Derived>
Rational det(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det: matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) +
                                ", expected square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Rational(1);

  IntMat b(n, n);
  Integer denom = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < n; ++j)
      l = lcm(l, denominator(Rational(m(i, j))));
    for (Eigen::Index j = 0; j < n; ++j)
      b(i, j) = to_integer(Rational(m(i, j)) * Rational(l));
    denom *= l;
  }

  Integer prev = 1;
  int sgn = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index p = k;
    while (p < n && b(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      b.row(p).swap(b.row(k));
      sgn = -sgn;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        b(i, j) = (b(k, k) * b(i, j) - b(i, k) * b(k, j)) / prev;
      b(i, k) = 0;
    }
    prev = b(k, k);
  }
  Integer d = b(n - 1, n - 1);
  if (sgn < 0) d = -d;
  return Rational(d, denom);
}

struct RrefResult {
  RatMat mat;                        // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column per nonzero row
};

template <typename Derived>
RrefResult rref(const Eigen::MatrixBase<Derived>& m) {
  RrefResult out;
  out.mat = m;
  RatMat& a = out.mat;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rational piv = a(r, c);
    for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) /= piv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

// Nonzero rows of the reduced row echelon form; same row space, full row rank.
template <typename Derived>
RatMat row_space_basis(const Eigen::MatrixBase<Derived>& m) {
  RrefResult rr = rref(m);
  const Eigen::Index r = static_cast<Eigen::Index>(rr.pivots.size());
  return rr.mat.topRows(r);
}

/**
 * Basis of the right kernel, one row per basis vector.
 *
 * Rows are scaled to integer vectors with content 1 and first nonzero entry
 * positive; there is one row per free column, in column order, so the result
 * is canonical. Row count is cols - rank.
 */
template <typename Derived>
RatMat kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  RrefResult rr = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<Eigen::Index> free_cols;
  {
    std::size_t k = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
      if (k < rr.pivots.size() && rr.pivots[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  RatMat out(static_cast<Eigen::Index>(free_cols.size()), n);
  out.setZero();
  for (std::size_t v = 0; v < free_cols.size(); ++v) {
    const Eigen::Index f = free_cols[v];
    out(static_cast<Eigen::Index>(v), f) = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
      out(static_cast<Eigen::Index>(v), rr.pivots[k]) =
          -rr.mat(static_cast<Eigen::Index>(k), f);
  }
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < n; ++j)
      l = lcm(l, denominator(out(i, j)));
    Integer g = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      g = gcd(g, to_integer(out(i, j) * Rational(l)));
    if (g == 0) g = 1;
    int lead = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (out(i, j) != 0) {
        lead = sign_of(out(i, j));
        break;
      }
    }
    Rational scale(l, g);
    if (lead < 0) scale = -scale;
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) *= scale;
  }
  return out;
}

}  // namespace omdual
