#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "omdual/bits.hpp"
#include "omdual/ground.hpp"

namespace omdual {

// A signed subset (X+, X-) of a ground set, stored as two disjoint masks.
struct SignVector {
  Mask pos = 0;
  Mask neg = 0;

  Mask support() const { return pos | neg; }
  bool is_zero() const { return (pos | neg) == 0; }
  bool is_positive() const { return neg == 0 && pos != 0; }

  int sign(int i) const {
    if (has_bit(pos, i)) return 1;
    if (has_bit(neg, i)) return -1;
    return 0;
  }

  SignVector negated() const { return {neg, pos}; }

  // Flips the signs of the elements of s.
  SignVector reoriented(Mask s) const {
    return {(pos & ~s) | (neg & s), (neg & ~s) | (pos & s)};
  }

  // Restriction to the elements of keep, re-indexed against keep.
  SignVector restricted(Mask keep) const {
    return {compress_mask(pos, keep), compress_mask(neg, keep)};
  }

  bool operator==(const SignVector&) const = default;
};

// Canonical order: by support (as ascending index sequences), then by the
// positive part.
inline bool sv_less(const SignVector& a, const SignVector& b) {
  if (a.support() != b.support()) return lex_less(a.support(), b.support());
  if (a.pos != b.pos) return lex_less(a.pos, b.pos);
  return false;
}

// (v o w)(e) = v(e) if nonzero, else w(e).
inline SignVector compose(const SignVector& v, const SignVector& w) {
  const Mask free = ~v.support();
  return {v.pos | (w.pos & free), v.neg | (w.neg & free)};
}

// Sign-vector orthogonality: the supports interact either not at all or with
// both an agreeing and a disagreeing element.
inline bool orthogonal(const SignVector& v, const SignVector& w) {
  const bool agree = ((v.pos & w.pos) | (v.neg & w.neg)) != 0;
  const bool disagree = ((v.pos & w.neg) | (v.neg & w.pos)) != 0;
  return agree == disagree;
}

inline std::string format_sign_vector(const SignVector& v, const GroundSet& g) {
  auto part = [&](Mask m) {
    std::string s = "{";
    bool first = true;
    for (int i : bit_indices(m)) {
      if (!first) s += ",";
      s += g.label(i);
      first = false;
    }
    return s + "}";
  };
  return "+" + part(v.pos) + " -" + part(v.neg);
}

inline nlohmann::json sign_vector_to_json(const SignVector& v, const GroundSet& g) {
  return nlohmann::json{{"pos", g.labels_of(v.pos)}, {"neg", g.labels_of(v.neg)}};
}

inline SignVector sign_vector_from_json(const nlohmann::json& j, const GroundSet& g) {
  if (!j.is_object() || !j.contains("pos") || !j.contains("neg"))
    throw std::invalid_argument("sign vector JSON needs \"pos\" and \"neg\" arrays");
  SignVector v;
  v.pos = g.mask_of(j.at("pos").get<std::vector<std::string>>());
  v.neg = g.mask_of(j.at("neg").get<std::vector<std::string>>());
  if (v.pos & v.neg)
    throw std::invalid_argument("sign vector has overlapping positive and negative parts");
  return v;
}

}  // namespace omdual
