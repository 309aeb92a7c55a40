#include "fairchain/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "fairchain/error.hpp"
#include "fairchain/rng.hpp"

namespace fairchain {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Returns (line number, content) for every non-blank, non-comment line,
// with trailing CR stripped.
std::vector<std::pair<std::size_t, std::string>> read_lines(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.emplace_back(lineno, line);
  }
  return out;
}

double parse_double(const std::string& cell, std::size_t lineno,
                    const std::string& column) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw InputError("line " + std::to_string(lineno) + ", column " + column +
                     ": cannot parse \"" + cell + "\" as a number");
  }
  return v;
}

int parse_label(const std::string& cell, std::size_t lineno,
                const std::string& column) {
  if (cell == "0") return 0;
  if (cell == "1") return 1;
  throw InputError("line " + std::to_string(lineno) + ", column " + column +
                   ": label must be 0 or 1, got \"" + cell + "\"");
}

std::size_t column_index(const std::vector<std::string>& header,
                         const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw InputError("missing column: " + name);
}

}  // namespace

ScoredDataset load_csv(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw InputError(path + " has no header row");
  const auto header = split(lines[0].second, ',');
  if (header.size() < 3 || header[0] != "item_id" || header[1] != "group") {
    throw InputError(path + ": header must start with item_id,group");
  }
  ScoreTableSchema schema;
  std::size_t first_score = 2;
  if (header[2] == "label") {
    schema.label_column = "label";
    first_score = 3;
  }
  schema.score_columns.assign(header.begin() + first_score, header.end());
  if (schema.score_columns.empty()) {
    throw InputError(path + ": header has no score columns");
  }
  return load_csv(path, schema);
}

ScoredDataset load_csv(const std::string& path,
                       const ScoreTableSchema& schema) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw InputError(path + " has no header row");
  const auto header = split(lines[0].second, ',');
  const std::size_t id_col = column_index(header, schema.item_id_column);
  const std::size_t group_col = column_index(header, schema.group_column);
  std::optional<std::size_t> label_col;
  if (schema.label_column) {
    label_col = column_index(header, *schema.label_column);
  }
  if (schema.score_columns.empty()) {
    throw InputError("schema binds no score columns");
  }
  std::vector<std::size_t> score_cols;
  for (const auto& name : schema.score_columns) {
    score_cols.push_back(column_index(header, name));
  }
  if (lines.size() == 1) throw InputError(path + " has no data rows");

  ScoredDataset::Builder builder(static_cast<int>(score_cols.size()));
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const auto& [lineno, text] = lines[row];
    const auto cells = split(text, ',');
    if (cells.size() != header.size()) {
      throw InputError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    }
    std::optional<int> label;
    if (label_col) {
      label = parse_label(cells[*label_col], lineno, *schema.label_column);
    }
    std::vector<double> scores;
    scores.reserve(score_cols.size());
    for (std::size_t k = 0; k < score_cols.size(); ++k) {
      scores.push_back(
          parse_double(cells[score_cols[k]], lineno, schema.score_columns[k]));
    }
    builder.add(cells[id_col], cells[group_col], label, std::move(scores));
  }
  return builder.build();
}

namespace {

std::string format_score(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_csv(const ScoredDataset& ds,
                   const std::vector<std::string>& preamble) {
  std::ostringstream out;
  for (const auto& line : preamble) out << "# " << line << "\n";
  out << "item_id,group";
  if (ds.has_labels()) out << ",label";
  for (int k = 0; k < ds.components(); ++k) out << ",score_" << k;
  out << "\n";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out << ds.id_of(i) << "," << ds.group_tags()[ds.group_of(i)];
    if (ds.has_labels()) out << "," << ds.label_of(i);
    for (int k = 0; k < ds.components(); ++k) {
      out << "," << format_score(ds.score(i, k));
    }
    out << "\n";
  }
  return out.str();
}

void write_csv(const ScoredDataset& ds, const std::string& path,
               const std::vector<std::string>& preamble) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << to_csv(ds, preamble);
}

std::vector<GermanCreditRecord> load_german_credit_records(
    const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw InputError(path + " is empty");
  std::vector<GermanCreditRecord> out;
  out.reserve(lines.size());
  for (const auto& [lineno, text] : lines) {
    std::istringstream ss(text);
    GermanCreditRecord rec;
    std::string tok;
    while (ss >> tok) rec.fields.push_back(tok);
    if (rec.fields.size() != 21) {
      throw InputError("line " + std::to_string(lineno) + ": expected 21 "
                       "fields, got " + std::to_string(rec.fields.size()));
    }
    const std::string& code = rec.fields[8];
    if (code == "A91" || code == "A93" || code == "A94") {
      rec.sex = "male";
    } else if (code == "A92" || code == "A95") {
      rec.sex = "female";
    } else {
      throw InputError("line " + std::to_string(lineno) +
                       ": unknown personal-status code " + code);
    }
    rec.credit_amount = parse_double(rec.fields[4], lineno, "credit_amount");
    rec.age = parse_double(rec.fields[12], lineno, "age");
    rec.num_credits = parse_double(rec.fields[15], lineno, "num_credits");
    rec.num_liable = parse_double(rec.fields[17], lineno, "num_liable");
    out.push_back(std::move(rec));
  }
  return out;
}

ScoredDataset load_german_credit(const std::string& path) {
  const auto records = load_german_credit_records(path);
  ScoredDataset::Builder builder(4);
  std::size_t row = 0;
  for (const auto& rec : records) {
    ++row;
    builder.add("row" + std::to_string(row), rec.sex, std::nullopt,
                {rec.credit_amount, rec.age, rec.num_credits, rec.num_liable});
  }
  return builder.build();
}

const std::vector<std::string>& german_credit_components() {
  static const std::vector<std::string> names = {"credit_amount", "age",
                                                 "num_credits", "num_liable"};
  return names;
}

namespace {

ScoredDataset keep_of_larger(const ScoredDataset& ds,
                             std::vector<std::size_t> kept_larger,
                             int smaller) {
  std::vector<std::size_t> keep = ds.group_items(smaller);
  keep.insert(keep.end(), kept_larger.begin(), kept_larger.end());
  std::sort(keep.begin(), keep.end());
  return ds.subset(keep);
}

}  // namespace

ScoredDataset equalize_groups(const ScoredDataset& ds,
                              const CompositeScore& composite) {
  if (composite.values.size() != ds.size()) {
    throw InputError("composite length does not match dataset");
  }
  if (ds.group_size(0) == ds.group_size(1)) return ds;
  const int larger = ds.group_size(0) > ds.group_size(1) ? 0 : 1;
  const std::size_t n = ds.group_size(1 - larger);
  std::vector<std::size_t> items = ds.group_items(larger);
  std::stable_sort(items.begin(), items.end(),
                   [&](std::size_t a, std::size_t b) {
                     return composite.values[a] > composite.values[b];
                   });
  items.resize(n);
  return keep_of_larger(ds, std::move(items), 1 - larger);
}

ScoredDataset equalize_groups_random(const ScoredDataset& ds,
                                     std::uint64_t seed) {
  if (ds.group_size(0) == ds.group_size(1)) return ds;
  const int larger = ds.group_size(0) > ds.group_size(1) ? 0 : 1;
  const std::size_t n = ds.group_size(1 - larger);
  std::vector<std::size_t> items = ds.group_items(larger);
  Rng rng(seed);
  rng.shuffle(items);
  items.resize(n);
  return keep_of_larger(ds, std::move(items), 1 - larger);
}

}  // namespace fairchain
