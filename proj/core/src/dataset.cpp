#include "fairchain/dataset.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "fairchain/error.hpp"

namespace fairchain {

int ScoredDataset::group_index(const std::string& tag) const {
  for (int g = 0; g < 2; ++g) {
    if (group_tags_[g] == tag) return g;
  }
  throw InputError("unknown group tag: " + tag);
}

std::vector<std::size_t> ScoredDataset::group_items(int group) const {
  std::vector<std::size_t> out;
  out.reserve(group_sizes_[group]);
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (groups_[i] == group) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> ScoredDataset::quadrant(int group, int label) const {
  if (!has_labels()) throw InputError("dataset has no labels");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (groups_[i] == group && labels_[i] == label) out.push_back(i);
  }
  return out;
}

std::string ScoredDataset::quadrant_name(int group, int label) const {
  return group_tags_[group] + "_" + std::to_string(label);
}

const std::vector<double>& ScoredDataset::component(int k) const {
  if (k < 0 || k >= components()) {
    throw InputError("component index " + std::to_string(k) +
                     " out of range [0, " + std::to_string(components()) + ")");
  }
  return columns_[k];
}

ScoredDataset ScoredDataset::with_component(int k,
                                            std::vector<double> column) const {
  component(k);  // bounds check
  if (column.size() != size()) {
    throw InputError("replacement column has " +
                     std::to_string(column.size()) + " values, expected " +
                     std::to_string(size()));
  }
  for (double v : column) {
    if (!std::isfinite(v)) {
      throw InputError("replacement column contains a non-finite score");
    }
  }
  ScoredDataset out = *this;
  out.columns_[k] = std::move(column);
  return out;
}

ScoredDataset ScoredDataset::subset(const std::vector<std::size_t>& keep) const {
  ScoredDataset out;
  out.group_tags_ = group_tags_;
  out.columns_.resize(columns_.size());
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t i : keep) {
    if (i >= size()) throw InputError("subset index out of range");
    if (!first && i <= prev) {
      throw InputError("subset indices must be strictly ascending");
    }
    prev = i;
    first = false;
    out.ids_.push_back(ids_[i]);
    out.groups_.push_back(groups_[i]);
    ++out.group_sizes_[groups_[i]];
    if (has_labels()) out.labels_.push_back(labels_[i]);
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      out.columns_[k].push_back(columns_[k][i]);
    }
  }
  if (out.group_sizes_[0] == 0 || out.group_sizes_[1] == 0) {
    throw InputError("subset drops one group entirely");
  }
  return out;
}

ScoredDataset::Builder::Builder(int num_components) : k_(num_components) {
  if (num_components < 1) {
    throw InputError("need at least one component");
  }
  ds_.columns_.resize(static_cast<std::size_t>(num_components));
}

ScoredDataset::Builder& ScoredDataset::Builder::add(
    ItemId id, const std::string& group_tag, std::optional<int> label,
    std::vector<double> scores) {
  if (scores.size() != static_cast<std::size_t>(k_)) {
    throw InputError("item " + id + " has " + std::to_string(scores.size()) +
                     " scores, expected " + std::to_string(k_));
  }
  for (double v : scores) {
    if (!std::isfinite(v)) {
      throw InputError("item " + id + " has a non-finite score");
    }
  }
  auto [it, inserted] =
      tag_index_.try_emplace(group_tag, static_cast<int>(tag_index_.size()));
  if (inserted) {
    if (tag_index_.size() > 2) {
      throw InputError("more than two groups (saw \"" + group_tag + "\")");
    }
    ds_.group_tags_.push_back(group_tag);
  }
  if (label) {
    if (*label != 0 && *label != 1) {
      throw InputError("item " + id + " has label " + std::to_string(*label) +
                       ", expected 0 or 1");
    }
    ++labeled_count_;
    ds_.labels_.push_back(*label);
  } else if (!ds_.labels_.empty()) {
    throw InputError("item " + id + " is unlabeled but earlier items carry "
                     "labels");
  }
  ds_.ids_.push_back(std::move(id));
  ds_.groups_.push_back(it->second);
  ++ds_.group_sizes_[it->second];
  ds_.columns_[0].reserve(ds_.columns_[0].size() + 1);
  for (int k = 0; k < k_; ++k) {
    ds_.columns_[static_cast<std::size_t>(k)].push_back(
        scores[static_cast<std::size_t>(k)]);
  }
  return *this;
}

ScoredDataset ScoredDataset::Builder::build() {
  if (labeled_count_ != 0 && labeled_count_ != ds_.ids_.size()) {
    throw InputError("labels must be present for all items or none");
  }
  if (ds_.group_tags_.size() != 2) {
    throw InputError("need exactly two groups, saw " +
                     std::to_string(ds_.group_tags_.size()));
  }
  std::set<ItemId> seen;
  for (const auto& id : ds_.ids_) {
    if (!seen.insert(id).second) throw InputError("duplicate item id: " + id);
  }
  return std::move(ds_);
}

CompositeScore compose(const ScoredDataset& ds) {
  return compose(ds, {});
}

CompositeScore compose(const ScoredDataset& ds,
                       const std::map<int, std::vector<double>>& overrides) {
  for (const auto& [k, col] : overrides) {
    ds.component(k);  // bounds check
    if (col.size() != ds.size()) {
      throw InputError("override for component " + std::to_string(k) +
                       " has wrong length");
    }
  }
  CompositeScore out;
  out.values.assign(ds.size(), 1.0);
  for (int k = 0; k < ds.components(); ++k) {
    auto it = overrides.find(k);
    const std::vector<double>& col =
        it == overrides.end() ? ds.component(k) : it->second;
    for (std::size_t i = 0; i < ds.size(); ++i) out.values[i] *= col[i];
  }
  return out;
}

}  // namespace fairchain
