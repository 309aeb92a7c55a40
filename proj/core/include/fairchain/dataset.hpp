#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fairchain {

using ItemId = std::string;

// Items with a group tag, an optional binary label, and K real scores each
// (one per system component). Immutable after build(); every audit operation
// takes it by const reference, so concurrent reads are safe.
//
// Invariants enforced at build time:
//   - item ids unique
//   - exactly two distinct group tags, both present at least once
//   - every item has exactly K finite scores
//   - labels present for all items or for none
class ScoredDataset {
 public:
  class Builder;

  std::size_t size() const { return ids_.size(); }
  int components() const { return static_cast<int>(columns_.size()); }

  const ItemId& id_of(std::size_t item) const { return ids_[item]; }

  // Group tags in first-appearance order; group indices are 0 and 1.
  const std::vector<std::string>& group_tags() const { return group_tags_; }
  int group_of(std::size_t item) const { return groups_[item]; }
  // Resolves a tag to its index; unknown tag -> InputError.
  int group_index(const std::string& tag) const;
  std::size_t group_size(int group) const { return group_sizes_[group]; }
  // Item indices of one group, ascending.
  std::vector<std::size_t> group_items(int group) const;

  bool has_labels() const { return !labels_.empty(); }
  int label_of(std::size_t item) const { return labels_[item]; }
  // Item indices with the given group and label, ascending. Labels required.
  std::vector<std::size_t> quadrant(int group, int label) const;
  // Quadrant name for diagnostics, e.g. "male_1".
  std::string quadrant_name(int group, int label) const;

  double score(std::size_t item, int component) const {
    return columns_[component][item];
  }
  const std::vector<double>& component(int k) const;

  // Copy with component k replaced. The new column must cover every item and
  // stay finite.
  ScoredDataset with_component(int k, std::vector<double> column) const;

  // Copy restricted to the given item indices (ascending, no duplicates).
  // Both groups must survive.
  ScoredDataset subset(const std::vector<std::size_t>& keep) const;

 private:
  ScoredDataset() = default;

  std::vector<ItemId> ids_;
  std::vector<int> groups_;
  std::vector<std::string> group_tags_;
  std::size_t group_sizes_[2] = {0, 0};
  std::vector<int> labels_;  // empty when unlabeled
  std::vector<std::vector<double>> columns_;  // [component][item]
};

class ScoredDataset::Builder {
 public:
  explicit Builder(int num_components);

  Builder& add(ItemId id, const std::string& group_tag,
               std::optional<int> label, std::vector<double> scores);
  ScoredDataset build();

 private:
  int k_;
  ScoredDataset ds_;
  std::map<std::string, int> tag_index_;
  std::size_t labeled_count_ = 0;
};

// Final system score: the per-item product of the K component scores.
struct CompositeScore {
  std::vector<double> values;
};

// Product of all component scores, with optional per-component overrides
// substituted before multiplication (components are never divided out, so
// zero scores in the data are harmless).
CompositeScore compose(const ScoredDataset& ds);
CompositeScore compose(const ScoredDataset& ds,
                       const std::map<int, std::vector<double>>& overrides);

}  // namespace fairchain
