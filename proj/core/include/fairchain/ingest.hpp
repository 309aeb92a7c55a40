#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairchain/dataset.hpp"

namespace fairchain {

// Column bindings for a score table. The standard layout is
//   item_id,group[,label],score_0,...,score_{K-1}
// which load_csv(path) infers from the header on its own.
struct ScoreTableSchema {
  std::string item_id_column = "item_id";
  std::string group_column = "group";
  std::optional<std::string> label_column;
  std::vector<std::string> score_columns;  // ordered; defines component order
};

// Loads a comma-separated score table. '#'-prefixed lines and blank lines
// are skipped anywhere in the file; the first remaining line is the header.
// Errors name the offending line and column. No quoting support: ids and
// group tags must not contain commas.
ScoredDataset load_csv(const std::string& path);
ScoredDataset load_csv(const std::string& path, const ScoreTableSchema& schema);

// Standard-layout serialization; scores at 17 significant digits so a
// write/load round trip is bit-exact. Preamble lines are emitted first, each
// prefixed with "# ".
std::string to_csv(const ScoredDataset& ds,
                   const std::vector<std::string>& preamble = {});
void write_csv(const ScoredDataset& ds, const std::string& path,
               const std::vector<std::string>& preamble = {});

// One line of the UCI credit file: the 21 raw space-separated fields plus
// the derived values this toolkit scores on.
struct GermanCreditRecord {
  std::vector<std::string> fields;
  std::string sex;  // "male" or "female", from the attribute-9 code
  double credit_amount = 0.0;
  double age = 0.0;
  double num_credits = 0.0;
  double num_liable = 0.0;
};

std::vector<GermanCreditRecord> load_german_credit_records(
    const std::string& path);

// German Credit as a 4-component ScoredDataset: components in the order
// credit_amount, age, num_credits, num_liable; group = derived sex; no
// labels. The canonical file yields 690 male / 310 female.
ScoredDataset load_german_credit(const std::string& path);

// Component names for the German Credit dataset, in component order.
const std::vector<std::string>& german_credit_components();

// Equalizes group sizes by truncating the larger group to its top-N members
// under the given composite (N = smaller group's size). Scores and the
// smaller group are untouched; ties at the cut are broken by input order.
ScoredDataset equalize_groups(const ScoredDataset& ds,
                              const CompositeScore& composite);

// Equalizes group sizes by keeping a seeded uniform random subset of the
// larger group instead of its top scorers.
ScoredDataset equalize_groups_random(const ScoredDataset& ds,
                                     std::uint64_t seed);

}  // namespace fairchain
