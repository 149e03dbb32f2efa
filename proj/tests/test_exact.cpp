#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "omdual/linalg.hpp"
#include "omdual/matrix_io.hpp"
#include "omdual/snf.hpp"

using namespace omdual;

namespace {

// Independent oracle: cofactor expansion along the first row.
Rational det_cofactor(const RatMat& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational sum(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RatMat sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    const Rational term = m(0, j) * det_cofactor(sub);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

RatMat random_int_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c,
                         int bound) {
  RatMat m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j)
      m(i, j) = Rational(
          static_cast<long long>(rng() % (2 * bound + 1)) - bound);
  return m;
}

RatMat worked_example_matrix() {
  RatMat a(2, 5);
  a << 1, 1, 1, 1, 1, 4, 3, 2, 1, 0;
  return a;
}

}  // namespace

TEST_CASE("det on small fixed matrices") {
  RatMat id = RatMat::Identity(3, 3);
  CHECK(det(id) == Rational(1));

  RatMat m(2, 2);
  m << 1, 1, 4, 3;
  CHECK(det(m) == Rational(-1));

  RatMat z(2, 2);
  z << 1, 2, 2, 4;
  CHECK(det(z) == Rational(0));

  RatMat q(2, 2);
  q << Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7);
  CHECK(det(q) == Rational(1, 14) - Rational(1, 15));
}

TEST_CASE("det rejects non-square input") {
  RatMat m(2, 3);
  m.setZero();
  CHECK_THROWS_AS(det(m), std::invalid_argument);
}

TEST_CASE("det matches cofactor oracle on seeded random matrices") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 5);
    RatMat m = random_int_matrix(rng, n, n, 6);
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("det is alternating and multilinear in columns") {
  std::mt19937_64 rng(7);
  RatMat m = random_int_matrix(rng, 4, 4, 5);
  RatMat swapped = m;
  swapped.col(1).swap(swapped.col(3));
  CHECK(det(swapped) == -det(m));

  RatMat doubled = m;
  for (Eigen::Index i = 0; i < 4; ++i) doubled(i, 2) *= 2;
  CHECK(det(doubled) == det(m) * 2);
}

TEST_CASE("rank on fixed matrices") {
  RatMat z(2, 3);
  z.setZero();
  CHECK(rank(z) == 0);
  CHECK(rank(worked_example_matrix()) == 2);
  RatMat m(2, 2);
  m << 1, 2, 2, 4;
  CHECK(rank(m) == 1);
  CHECK(rank(RatMat::Identity(4, 4)) == 4);
}

TEST_CASE("kernel_basis spans the kernel with canonical integer rows") {
  const RatMat a = worked_example_matrix();
  const RatMat k = kernel_basis(a);
  REQUIRE(k.rows() == 3);
  REQUIRE(k.cols() == 5);

  // Every returned row is annihilated by a.
  RatMat prod = a * k.transpose();
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j)
      CHECK(prod(i, j) == 0);

  // These three vectors must lie in the kernel of a.
  RatMat expected(3, 5);
  expected << 1, -2, 1, 0, 0, 0, 1, -2, 1, 0, 0, 0, 1, -2, 1;
  RatMat prod2 = a * expected.transpose();
  for (Eigen::Index i = 0; i < prod2.rows(); ++i)
    for (Eigen::Index j = 0; j < prod2.cols(); ++j)
      CHECK(prod2(i, j) == 0);

  // Canonical form: integer entries, content 1, first nonzero positive.
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    Integer g = 0;
    int lead = 0;
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      CHECK(is_integer(k(i, j)));
      g = gcd(g, numerator(k(i, j)));
      if (lead == 0 && k(i, j) != 0) lead = sign_of(k(i, j));
    }
    CHECK(g == 1);
    CHECK(lead == 1);
  }
}

TEST_CASE("kernel_basis on edge cases") {
  CHECK(kernel_basis(RatMat::Identity(2, 2)).rows() == 0);

  RatMat row(1, 2);
  row << 1, 1;
  RatMat k = kernel_basis(row);
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) == 1);
  CHECK(k(0, 1) == -1);
}

TEST_CASE("kernel_basis row count equals cols minus rank on random input") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng() % 4);
    const Eigen::Index c = 1 + static_cast<Eigen::Index>(rng() % 6);
    RatMat m = random_int_matrix(rng, r, c, 3);
    RatMat k = kernel_basis(m);
    CHECK(k.rows() == c - rank(m));
    if (k.rows() > 0) {
      RatMat prod = m * k.transpose();
      for (Eigen::Index i = 0; i < prod.rows(); ++i)
        for (Eigen::Index j = 0; j < prod.cols(); ++j)
          CHECK(prod(i, j) == 0);
      CHECK(rank(k) == k.rows());
    }
  }
}

TEST_CASE("smith_normal_form on fixed matrices") {
  CHECK(smith_normal_form(RatMat(RatMat::Identity(3, 3))) ==
        std::vector<Integer>{1, 1, 1});

  RatMat d(2, 2);
  d << 2, 0, 0, 3;
  CHECK(smith_normal_form(d) == std::vector<Integer>{1, 6});

  // Edge boundary of a 3-cycle: rank 2, torsion-free.
  RatMat b(3, 3);
  b << -1, -1, 0, 1, 0, -1, 0, 1, 1;
  CHECK(smith_normal_form(b) == std::vector<Integer>{1, 1});

  RatMat zero(3, 4);
  zero.setZero();
  CHECK(smith_normal_form(zero).empty());
}

TEST_CASE("smith_normal_form rejects non-integer entries") {
  RatMat m(1, 1);
  m(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(smith_normal_form(m), std::domain_error);
}

TEST_CASE("smith_normal_form invariants on seeded random matrices") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng() % 5);
    const Eigen::Index c = 1 + static_cast<Eigen::Index>(rng() % 5);
    RatMat m = random_int_matrix(rng, r, c, 7);
    auto f = smith_normal_form(m);
    CHECK(static_cast<Eigen::Index>(f.size()) == rank(m));
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i] > 0);
      if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
    }
    if (r == c && static_cast<Eigen::Index>(f.size()) == r) {
      Integer prod = 1;
      for (const auto& x : f) prod *= x;
      Rational dd = det(m);
      CHECK(Rational(prod) == (dd < 0 ? -dd : dd));
    }
  }
}

TEST_CASE("smith_normal_form finds torsion") {
  // Presentation matrix of Z/2 + Z/6.
  RatMat m(2, 2);
  m << 2, 0, 2, 6;
  CHECK(smith_normal_form(m) == std::vector<Integer>{2, 6});
}

TEST_CASE("matrix JSON round trip") {
  RatMat m(2, 3);
  m << 1, Rational(-7, 2), 0, 5, 100, Rational(22, 7);
  std::vector<std::string> labels{"a", "b", "f"};
  nlohmann::json j = matrix_to_json(m, labels);
  LabeledMatrix back = matrix_from_json(j);
  REQUIRE(back.mat.rows() == 2);
  REQUIRE(back.mat.cols() == 3);
  CHECK(back.mat == m);
  CHECK(back.labels == labels);
}

TEST_CASE("matrix JSON validation") {
  CHECK_THROWS(matrix_from_json(nlohmann::json::parse("{\"rows\":1}")));
  CHECK_THROWS(matrix_from_json(
      nlohmann::json::parse("{\"rows\":1,\"cols\":2,\"entries\":[[1]]}")));
  CHECK_THROWS(matrix_from_json(nlohmann::json::parse(
      "{\"rows\":1,\"cols\":1,\"entries\":[[1.5]]}")));
  CHECK_THROWS(matrix_from_json(nlohmann::json::parse(
      "{\"rows\":1,\"cols\":2,\"entries\":[[1,2]],\"labels\":[\"a\",\"a\"]}")));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(parse_rational("-22/7") == Rational(-22, 7));
  CHECK(parse_rational("4/6") == Rational(2, 3));
}
