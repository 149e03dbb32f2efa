#pragma once

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "omdual/bits.hpp"

namespace omdual {

// Ordered, distinct element labels. The label order fixes the bit layout of
// every Mask used for this ground set.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > 64)
      throw std::invalid_argument("ground set larger than 64 elements");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty()) throw std::invalid_argument("empty ground label");
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate ground label: " + l);
    }
  }

  static GroundSet numbered(int n) {
    std::vector<std::string> labs;
    labs.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labs.push_back(std::to_string(i));
    return GroundSet(std::move(labs));
  }

  static GroundSet numbered_with_f(int n) {
    std::vector<std::string> labs;
    labs.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) labs.push_back(std::to_string(i));
    labs.push_back("f");
    return GroundSet(std::move(labs));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  Mask all() const { return full_mask(size()); }

  int index(const std::string& lab) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[static_cast<std::size_t>(i)] == lab) return i;
    return -1;
  }

  int index_checked(const std::string& lab) const {
    const int i = index(lab);
    if (i < 0) throw std::invalid_argument("unknown ground label: " + lab);
    return i;
  }

  Mask mask_of(const std::vector<std::string>& labs) const {
    Mask m = 0;
    for (const auto& l : labs) m |= bit(index_checked(l));
    return m;
  }

  std::vector<std::string> labels_of(Mask m) const {
    std::vector<std::string> out;
    for (int i : bit_indices(m)) out.push_back(label(i));
    return out;
  }

  // Ground set for the restriction to the elements of keep, in order.
  GroundSet restricted(Mask keep) const {
    return GroundSet(labels_of(keep));
  }

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace omdual
