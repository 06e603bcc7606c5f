#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linftrees/rational.hpp"

namespace linftrees {

/// Point of R^(n choose 2): one rational per unordered leaf pair, stored in
/// lexicographic pair order (12, 13, ..., 1n, 23, ...). Entries may be
/// negative; symmetry and the zero diagonal are implicit in the encoding.
class DissimilarityMap {
 public:
  DissimilarityMap() = default;
  DissimilarityMap(std::vector<std::string> labels, RatVector values);

  std::size_t n() const { return labels_.size(); }
  std::size_t pair_count() const { return values_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RatVector& values() const { return values_; }

  static std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

  const Rational& at(std::size_t i, std::size_t j) const;
  Rational& at(std::size_t i, std::size_t j);

  std::size_t label_index(const std::string& label) const;  // throws if absent
  std::string pair_name(std::size_t pair) const;            // "(A,B)"

  DissimilarityMap shifted(const Rational& c) const;   // + c on every pair
  DissimilarityMap scaled(const Rational& c) const;
  DissimilarityMap relabeled(std::vector<std::string> new_labels) const;

  static DissimilarityMap componentwise_max(const DissimilarityMap& a, const DissimilarityMap& b);

  bool operator==(const DissimilarityMap& o) const;

 private:
  std::vector<std::string> labels_;
  RatVector values_;
};

/// max_ij |a_ij - b_ij|; labels must agree.
Rational linf_gap(const DissimilarityMap& a, const DissimilarityMap& b);

}  // namespace linftrees
