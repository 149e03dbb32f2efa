#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace omdual {

// All arithmetic is exact: arbitrary-precision integers and rationals in
// lowest terms with positive denominator (maintained by GMP).
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(const Integer& x) { return x.sign(); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline Integer to_integer(const Rational& x) {
  if (!is_integer(x))
    throw std::domain_error("expected an integer, got " + x.str());
  return numerator(x);
}

// Accepts "p", "-p" and "p/q" with decimal digits; q must be positive after
// normalization, which Rational's two-argument constructor guarantees.
inline Rational parse_rational(const std::string& s) {
  const auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("malformed rational '" + s + "'");
  };
  const auto slash = s.find('/');
  const auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw bad();
    if (s[from] == '-') ++from;
    if (from >= to) throw bad();
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
  };
  if (slash == std::string::npos) {
    digits(0, s.size());
    return Rational(Integer(s));
  }
  digits(0, slash);
  digits(slash + 1, s.size());
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(num, den);
}

inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace omdual
