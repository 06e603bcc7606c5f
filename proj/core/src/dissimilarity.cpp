#include "linftrees/dissimilarity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linftrees {

DissimilarityMap::DissimilarityMap(std::vector<std::string> labels, RatVector values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  const std::size_t n = labels_.size();
  if (n < 2) throw std::invalid_argument("DissimilarityMap: need at least 2 labels");
  if (values_.size() != n * (n - 1) / 2) {
    throw std::invalid_argument("DissimilarityMap: expected " + std::to_string(n * (n - 1) / 2) +
                                " values for " + std::to_string(n) + " labels, got " +
                                std::to_string(values_.size()));
  }
  std::set<std::string> uniq(labels_.begin(), labels_.end());
  if (uniq.size() != n) throw std::invalid_argument("DissimilarityMap: duplicate labels");
}

std::size_t DissimilarityMap::pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j || i >= n || j >= n) throw std::out_of_range("pair_index: bad pair");
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

const Rational& DissimilarityMap::at(std::size_t i, std::size_t j) const {
  return values_[pair_index(n(), i, j)];
}

Rational& DissimilarityMap::at(std::size_t i, std::size_t j) {
  return values_[pair_index(n(), i, j)];
}

std::size_t DissimilarityMap::label_index(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::invalid_argument("DissimilarityMap: unknown label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string DissimilarityMap::pair_name(std::size_t pair) const {
  const std::size_t nn = n();
  for (std::size_t i = 0; i + 1 < nn; ++i) {
    for (std::size_t j = i + 1; j < nn; ++j) {
      if (pair_index(nn, i, j) == pair) return "(" + labels_[i] + "," + labels_[j] + ")";
    }
  }
  throw std::out_of_range("pair_name: bad pair index");
}

DissimilarityMap DissimilarityMap::shifted(const Rational& c) const {
  RatVector v = values_;
  for (auto& e : v) e += c;
  return DissimilarityMap(labels_, std::move(v));
}

DissimilarityMap DissimilarityMap::scaled(const Rational& c) const {
  RatVector v = values_;
  for (auto& e : v) e *= c;
  return DissimilarityMap(labels_, std::move(v));
}

DissimilarityMap DissimilarityMap::relabeled(std::vector<std::string> new_labels) const {
  if (new_labels.size() != labels_.size()) {
    throw std::invalid_argument("relabeled: label count mismatch");
  }
  return DissimilarityMap(std::move(new_labels), values_);
}

DissimilarityMap DissimilarityMap::componentwise_max(const DissimilarityMap& a,
                                                     const DissimilarityMap& b) {
  if (a.labels() != b.labels()) throw std::invalid_argument("componentwise_max: label mismatch");
  RatVector v(a.pair_count());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = max(a.values()[k], b.values()[k]);
  return DissimilarityMap(a.labels(), std::move(v));
}

bool DissimilarityMap::operator==(const DissimilarityMap& o) const {
  return labels_ == o.labels_ && values_ == o.values_;
}

Rational linf_gap(const DissimilarityMap& a, const DissimilarityMap& b) {
  if (a.labels() != b.labels()) throw std::invalid_argument("linf_gap: label mismatch");
  Rational best;
  for (std::size_t k = 0; k < a.pair_count(); ++k) {
    best = max(best, (a.values()[k] - b.values()[k]).abs());
  }
  return best;
}

}  // namespace linftrees
