#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "omdual/rational.hpp"

namespace omdual {

// A matrix together with optional column labels. Labels default to
// "1", "2", ... when absent.
struct LabeledMatrix {
  RatMat mat;
  std::vector<std::string> labels;

  std::vector<std::string> labels_or_default() const {
    if (!labels.empty()) return labels;
    std::vector<std::string> out;
    for (Eigen::Index j = 0; j < mat.cols(); ++j)
      out.push_back(std::to_string(j + 1));
    return out;
  }
};

inline Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_number_integer())
    return Rational(static_cast<long long>(v.get<std::int64_t>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::runtime_error(
      "matrix entry must be an integer or a \"p/q\" string, got " + v.dump());
}

inline nlohmann::json rational_to_json(const Rational& x) {
  if (is_integer(x)) {
    const Integer n = numerator(x);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return nlohmann::json(static_cast<std::int64_t>(n));
  }
  return nlohmann::json(to_string(x));
}

// Schema: {"rows": r, "cols": c, "entries": [[...], ...], "labels": [...]?}
inline LabeledMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw std::runtime_error(
        "matrix JSON needs \"rows\", \"cols\" and \"entries\"");
  const auto r = j.at("rows").get<Eigen::Index>();
  const auto c = j.at("cols").get<Eigen::Index>();
  if (r < 0 || c < 0) throw std::runtime_error("matrix JSON: negative shape");
  const auto& e = j.at("entries");
  if (!e.is_array() || static_cast<Eigen::Index>(e.size()) != r)
    throw std::runtime_error("matrix JSON: expected " + std::to_string(r) +
                             " entry rows");
  LabeledMatrix out;
  out.mat.resize(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& row = e.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c)
      throw std::runtime_error("matrix JSON: row " + std::to_string(i) +
                               " has wrong length");
    for (Eigen::Index k = 0; k < c; ++k)
      out.mat(i, k) = rational_from_json(row.at(static_cast<std::size_t>(k)));
  }
  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    if (!labels.is_array() || static_cast<Eigen::Index>(labels.size()) != c)
      throw std::runtime_error("matrix JSON: need one label per column");
    std::set<std::string> seen;
    for (const auto& l : labels) {
      out.labels.push_back(l.get<std::string>());
      if (!seen.insert(out.labels.back()).second)
        throw std::runtime_error("matrix JSON: duplicate label '" +
                                 out.labels.back() + "'");
    }
  }
  return out;
}

inline nlohmann::json matrix_to_json(const RatMat& m,
                                     const std::vector<std::string>& labels =
                                         {}) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(rational_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  nlohmann::json j{{"rows", m.rows()}, {"cols", m.cols()},
                   {"entries", std::move(entries)}};
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

inline nlohmann::json matrix_to_json(const LabeledMatrix& m) {
  return matrix_to_json(m.mat, m.labels);
}

}  // namespace omdual
