// fairchain: audit multi-component ranking systems for group fairness,
// simulate per-component fixes, and rank components by headroom.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairchain/counterfactual.hpp"
#include "fairchain/datagen.hpp"
#include "fairchain/error.hpp"
#include "fairchain/fixes.hpp"
#include "fairchain/ingest.hpp"
#include "fairchain/metrics.hpp"

namespace {

using namespace fairchain;

struct CommonOptions {
  std::string input;
  std::string format = "csv";  // csv | german
  std::string metric = "exposure";
  std::string utility = "power";
  double w = 0.65;
  std::string top_n = "all";
  std::string ties = "rank-share";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string fix_spec;
  double p = 0.9;
  std::string reference_group;
  bool equalize = false;
  bool equalize_random = false;
  bool positivity_shift = false;
  bool half_credit = false;
  std::string out;
};

void add_ranking_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--metric", o.metric, "Target metric")
      ->check(CLI::IsMember({"exposure", "pairwise"}))
      ->capture_default_str();
  cmd->add_option("--utility", o.utility, "Positional utility")
      ->check(CLI::IsMember({"power", "log"}))
      ->capture_default_str();
  cmd->add_option("--w", o.w, "Exponent of the power utility")
      ->capture_default_str();
  cmd->add_option("--top-n", o.top_n, "Exposure cutoff: a position or 'all'")
      ->capture_default_str();
  cmd->add_option("--ties", o.ties, "Tie handling in rankings")
      ->check(CLI::IsMember({"rank-share", "random"}))
      ->capture_default_str();
  cmd->add_flag("--half-credit-ties", o.half_credit,
                "Score tied pairwise comparisons 0.5 instead of 0");
}

void add_seed_flag(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed,
                  "Random seed (default: FAIRCHAIN_SEED env var, else 0)")
      ->trigger_on_parse()
      ->each([&o](const std::string&) { o.seed_given = true; });
}

void add_fix_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option(
      "--fix", o.fix_spec,
      "Per-component fixes, e.g. 0=normalize,2=marginal-match or all=normalize");
  cmd->add_option("--p", o.p, "Constant-p probe value")->capture_default_str();
  cmd->add_option("--reference-group", o.reference_group,
                  "Group kept fixed by matching fixes (default: "
                  "lexicographically first tag)");
  cmd->add_flag("--positivity-shift", o.positivity_shift,
                "Shift every component to strictly positive scores before "
                "composing");
}

void add_input_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("input", o.input, "Input data file")->required();
  cmd->add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"csv", "german"}))
      ->capture_default_str();
  cmd->add_flag("--equalize-groups", o.equalize,
                "Truncate the larger group to the smaller group's size, "
                "keeping its top members by composite score");
  cmd->add_flag("--equalize-random", o.equalize_random,
                "With --equalize-groups: keep a seeded random subset instead "
                "of the top scorers");
}

std::uint64_t env_seed() {
  const char* env = std::getenv("FAIRCHAIN_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw InputError(std::string("FAIRCHAIN_SEED is not an integer: ") + env);
  }
  return static_cast<std::uint64_t>(v);
}

void resolve_seed(CommonOptions& o) {
  if (!o.seed_given) o.seed = env_seed();
}

UtilityFn make_utility(const CommonOptions& o) {
  return o.utility == "log" ? UtilityFn::log_discount() : UtilityFn::power(o.w);
}

TiePolicy make_ties(const CommonOptions& o) {
  return o.ties == "random" ? TiePolicy::seeded_random : TiePolicy::rank_share;
}

std::optional<std::size_t> make_top_n(const CommonOptions& o) {
  if (o.top_n == "all") return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(o.top_n.c_str(), &end, 10);
  if (end == nullptr || *end != '\0' || v == 0) {
    throw InputError("--top-n must be a positive integer or 'all', got " +
                     o.top_n);
  }
  return static_cast<std::size_t>(v);
}

std::vector<FixMethod> parse_fix_spec(const std::string& spec,
                                      int num_components,
                                      FixMethod fallback = FixMethod::none) {
  std::vector<FixMethod> methods(static_cast<std::size_t>(num_components),
                                 fallback);
  if (spec.empty()) return methods;
  std::stringstream ss(spec);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw InputError("--fix entries look like k=method, got " + entry);
    }
    const std::string key = entry.substr(0, eq);
    const FixMethod method = parse_fix_method(entry.substr(eq + 1));
    if (key == "all") {
      std::fill(methods.begin(), methods.end(), method);
      continue;
    }
    char* end = nullptr;
    const long k = std::strtol(key.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || k < 0 || k >= num_components) {
      throw InputError("--fix component index out of range: " + key);
    }
    methods[static_cast<std::size_t>(k)] = method;
  }
  return methods;
}

std::string fix_spec_echo(const std::vector<FixMethod>& methods) {
  std::string out;
  for (std::size_t k = 0; k < methods.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(k) + "=" + fix_method_name(methods[k]);
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

FixConfig make_fix_config(const CommonOptions& o, int num_components,
                          FixMethod fallback = FixMethod::none) {
  FixConfig cfg;
  cfg.methods = parse_fix_spec(o.fix_spec, num_components, fallback);
  cfg.p = o.p;
  if (!o.reference_group.empty()) cfg.reference_group = o.reference_group;
  cfg.positivity_shift = o.positivity_shift;
  return cfg;
}

ScoredDataset load_input(const CommonOptions& o) {
  ScoredDataset ds = o.format == "german" ? load_german_credit(o.input)
                                          : load_csv(o.input);
  if (o.equalize) {
    ds = o.equalize_random ? equalize_groups_random(ds, o.seed)
                           : equalize_groups(ds, compose(ds));
  }
  return ds;
}

// Effective settings echoed into every report so each number is
// recomputable from the input file plus the header alone.
std::vector<std::string> config_echo(const std::string& command,
                                     const CommonOptions& o,
                                     const FixConfig* fix) {
  std::vector<std::string> lines;
  lines.push_back("command=" + command);
  lines.push_back("input=" + o.input);
  lines.push_back("format=" + o.format);
  lines.push_back("metric=" + o.metric);
  lines.push_back("utility=" + o.utility +
                  (o.utility == "power" ? " w=" + fmt_param(o.w) : ""));
  lines.push_back("top-n=" + o.top_n);
  lines.push_back("ties=" + o.ties);
  lines.push_back("seed=" + std::to_string(o.seed));
  lines.push_back(std::string("half-credit-ties=") +
                  (o.half_credit ? "on" : "off"));
  lines.push_back(std::string("equalize-groups=") +
                  (!o.equalize ? "off" : (o.equalize_random ? "random" : "top")));
  if (fix != nullptr) {
    lines.push_back("fix=" + fix_spec_echo(fix->methods));
    lines.push_back("p=" + fmt_param(fix->p));
    lines.push_back("reference-group=" +
                    (fix->reference_group ? *fix->reference_group
                                          : std::string("(first tag)")));
    lines.push_back(std::string("positivity-shift=") +
                    (fix->positivity_shift ? "on" : "off"));
  }
  return lines;
}

void write_text(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << content;
}

CompositeScore audited_composite(const ScoredDataset& ds,
                                 const CommonOptions& o) {
  if (!o.positivity_shift) return compose(ds);
  std::map<int, std::vector<double>> cols;
  for (int k = 0; k < ds.components(); ++k) {
    cols[k] = shifted_positive(ds.component(k));
  }
  return compose(ds, cols);
}

// ---------------------------------------------------------------- audit

struct AuditRow {
  std::string scores;
  double a = 0.0, b = 0.0;  // exposure shares or directional accuracies
};

int cmd_audit(const CommonOptions& o, const std::string& report_format) {
  const ScoredDataset ds = load_input(o);
  const UtilityFn utility = make_utility(o);
  const TiePolicy ties = make_ties(o);
  const auto top_n = make_top_n(o);
  const PairwiseOptions popts{o.half_credit};

  std::vector<AuditRow> exposure_rows;
  auto exposure_row = [&](const std::string& name,
                          const std::vector<double>& scores) {
    const ExposureReport rep =
        exposure_gap(ds, rank(scores, ties, o.seed), utility, top_n);
    exposure_rows.push_back({name, rep.exposure_share_A, rep.exposure_share_B});
  };
  const CompositeScore composite = audited_composite(ds, o);
  exposure_row("composite", composite.values);
  for (int k = 0; k < ds.components(); ++k) {
    exposure_row("component " + std::to_string(k), ds.component(k));
  }

  std::vector<AuditRow> pairwise_rows;
  if (ds.has_labels()) {
    auto pairwise_row = [&](const std::string& name,
                            const std::vector<double>& scores) {
      const PairwiseReport rep = pairwise_gap(scores, ds, popts);
      pairwise_rows.push_back({name, rep.acc_A_over_B, rep.acc_B_over_A});
    };
    pairwise_row("composite", composite.values);
    for (int k = 0; k < ds.components(); ++k) {
      pairwise_row("component " + std::to_string(k), ds.component(k));
    }
  }

  const auto [ga, gb] = canonical_groups(ds);
  const std::string& tag_a = ds.group_tags()[ga];
  const std::string& tag_b = ds.group_tags()[gb];
  const auto config = config_echo("audit", o, nullptr);

  std::ostringstream md;
  if (report_format == "md") {
    md << "# fairchain audit\n\n## configuration\n\n```\n";
    for (const auto& line : config) md << line << "\n";
    md << "```\n\n## exposure\n\n";
    md << "| scores | share[" << tag_a << "] | share[" << tag_b
       << "] | signed gap | abs gap |\n|---|---|---|---|---|\n";
    for (const auto& row : exposure_rows) {
      const double signed_gap = row.a - row.b;
      md << "| " << row.scores << " | " << fmt(row.a) << " | " << fmt(row.b)
         << " | " << fmt(signed_gap) << " | " << fmt(std::fabs(signed_gap))
         << " |\n";
    }
    if (!pairwise_rows.empty()) {
      md << "\n## pairwise\n\n";
      md << "| scores | acc[" << tag_a << ">" << tag_b << "] | acc[" << tag_b
         << ">" << tag_a << "] | gap |\n|---|---|---|---|\n";
      for (const auto& row : pairwise_rows) {
        md << "| " << row.scores << " | " << fmt(row.a) << " | " << fmt(row.b)
           << " | " << fmt(std::fabs(row.a - row.b)) << " |\n";
      }
    }
  } else {
    for (const auto& line : config) md << "# " << line << "\n";
    md << "section,scores,a,b,signed_gap,abs_gap\n";
    for (const auto& row : exposure_rows) {
      md << "exposure," << row.scores << "," << fmt(row.a) << "," << fmt(row.b)
         << "," << fmt(row.a - row.b) << "," << fmt(std::fabs(row.a - row.b))
         << "\n";
    }
    for (const auto& row : pairwise_rows) {
      md << "pairwise," << row.scores << "," << fmt(row.a) << "," << fmt(row.b)
         << "," << fmt(row.a - row.b) << "," << fmt(std::fabs(row.a - row.b))
         << "\n";
    }
  }
  write_text(o.out, md.str());
  return 0;
}

// ---------------------------------------------------------------- fix

int cmd_fix(const CommonOptions& o) {
  ScoredDataset ds = load_input(o);
  const FixConfig cfg = make_fix_config(o, ds.components());
  for (int k = 0; k < ds.components(); ++k) {
    const FixMethod method = cfg.methods[static_cast<std::size_t>(k)];
    if (method == FixMethod::delta_match) {
      throw FixModeError(
          "delta-match is pair-level and has no per-item score column to "
          "write; use conditional-match");
    }
    if (method == FixMethod::none) continue;
    ds = ds.with_component(k, apply_fix(ds, k, method, cfg).scores);
  }
  if (cfg.positivity_shift) {
    for (int k = 0; k < ds.components(); ++k) {
      ds = ds.with_component(k, shifted_positive(ds.component(k)));
    }
  }
  const std::string csv = to_csv(ds, config_echo("fix", o, &cfg));
  write_text(o.out, csv);
  return 0;
}

// ---------------------------------------------------------------- headroom

std::vector<std::vector<int>> parse_subsets(const std::string& spec, int k) {
  std::vector<std::vector<int>> subsets;
  std::stringstream ss(spec);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    std::vector<int> subset;
    std::stringstream es(entry);
    std::string idx;
    while (std::getline(es, idx, '+')) {
      char* end = nullptr;
      const long v = std::strtol(idx.c_str(), &end, 10);
      if (end == nullptr || *end != '\0' || v < 0 || v >= k) {
        throw InputError("--subsets component index out of range: " + idx);
      }
      subset.push_back(static_cast<int>(v));
    }
    if (subset.empty()) throw InputError("--subsets has an empty entry");
    subsets.push_back(std::move(subset));
  }
  if (subsets.empty()) throw InputError("--subsets is empty");
  return subsets;
}

std::string subset_echo(const std::vector<int>& subset) {
  std::string out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(subset[i]);
  }
  return out;
}

int cmd_headroom(const CommonOptions& o, const std::string& subsets_spec) {
  const ScoredDataset ds = load_input(o);
  CounterfactualSpec spec;
  spec.metric = o.metric == "pairwise" ? TargetMetric::pairwise
                                       : TargetMetric::exposure;
  spec.utility = make_utility(o);
  spec.top_n = make_top_n(o);
  spec.ties = make_ties(o);
  spec.seed = o.seed;
  spec.pairwise = PairwiseOptions{o.half_credit};
  // A sweep needs a fix per component; default to marginal matching.
  spec.fix = make_fix_config(o, ds.components(), FixMethod::marginal_match);

  HeadroomTable table;
  if (subsets_spec == "singletons") {
    table = headroom_sweep(ds, spec, SubsetMode::singletons);
  } else if (subsets_spec == "all") {
    table = headroom_sweep(ds, spec, SubsetMode::all_subsets);
  } else {
    table = headroom_sweep(ds, spec, parse_subsets(subsets_spec, ds.components()));
  }

  std::ostringstream out;
  auto config = config_echo("headroom", o, &spec.fix);
  config.push_back("subsets=" + subsets_spec);
  for (const auto& line : config) out << "# " << line << "\n";
  out << "subset,baseline_gap,improved_gap,fi\n";
  for (const auto& row : table.rows) {
    out << subset_echo(row.subset) << "," << fmt(row.baseline_gap) << ","
        << fmt(row.improved_gap) << "," << fmt(row.fi) << "\n";
  }
  write_text(o.out, out.str());
  return 0;
}

// ---------------------------------------------------------------- synth

int cmd_synth(const CommonOptions& o, const std::string& dataset,
              std::size_t n, double a, double eps) {
  ScoredDataset ds = [&] {
    if (dataset == "s1") return gen_synthetic_1(n, o.seed);
    if (dataset == "s2") return gen_synthetic_2(n, o.seed);
    if (dataset == "epsilon") return epsilon_example(a, eps);
    auto all = fixtures();
    const auto it = all.find(dataset);
    if (it == all.end()) throw InputError("unknown dataset: " + dataset);
    return it->second;
  }();
  std::vector<std::string> config = {"command=synth", "dataset=" + dataset,
                                     "seed=" + std::to_string(o.seed)};
  if (dataset == "s1" || dataset == "s2") {
    config.push_back("n=" + std::to_string(n));
  }
  if (dataset == "epsilon") {
    config.push_back("a=" + fmt_param(a));
    config.push_back("eps=" + fmt_param(eps));
  }
  write_text(o.out, to_csv(ds, config));
  return 0;
}

// ---------------------------------------------------------------- curve

std::vector<std::size_t> parse_positions(const std::string& spec) {
  std::vector<std::size_t> out;
  const auto parse_one = [](const std::string& s) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || v == 0) {
      throw InputError("--t positions must be positive integers, got " + s);
    }
    return static_cast<std::size_t>(v);
  };
  if (spec.find(':') != std::string::npos) {
    std::stringstream ss(spec);
    std::string part;
    std::vector<std::size_t> parts;
    while (std::getline(ss, part, ':')) parts.push_back(parse_one(part));
    if (parts.size() != 3) {
      throw InputError("--t range form is start:stop:step");
    }
    for (std::size_t t = parts[0]; t <= parts[1]; t += parts[2]) {
      out.push_back(t);
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_one(part));
  return out;
}

int cmd_curve(const CommonOptions& o, const std::string& t_spec,
              std::size_t random_runs) {
  const ScoredDataset ds = load_input(o);
  const UtilityFn utility = make_utility(o);
  const auto positions = parse_positions(t_spec);
  const GapCurve curve = gap_curve(ds, compose(ds).values, utility, positions,
                                   make_ties(o), o.seed);
  GapCurve reference;
  if (random_runs > 0) {
    reference = random_order_reference(ds, utility, positions, random_runs,
                                       o.seed);
  }
  std::ostringstream out;
  auto config = config_echo("curve", o, nullptr);
  config.push_back("t=" + t_spec);
  config.push_back("random-runs=" + std::to_string(random_runs));
  for (const auto& line : config) out << "# " << line << "\n";
  out << (random_runs > 0 ? "t,gap,random_gap\n" : "t,gap\n");
  for (std::size_t i = 0; i < curve.positions.size(); ++i) {
    out << curve.positions[i] << "," << fmt(curve.gaps[i]);
    if (random_runs > 0) out << "," << fmt(reference.gaps[i]);
    out << "\n";
  }
  write_text(o.out, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fairness audits for product-composed ranking systems"};
  app.require_subcommand(1);

  CommonOptions o;
  std::string report_format = "md";
  std::string subsets_spec = "singletons";
  std::string dataset = "s1";
  std::size_t synth_n = 1000;
  double eps_a = 1.0, eps_eps = 0.1;
  std::string t_spec;
  std::size_t random_runs = 0;

  CLI::App* audit = app.add_subcommand(
      "audit", "Exposure and pairwise reports for a score table");
  add_input_flags(audit, o);
  add_ranking_flags(audit, o);
  add_seed_flag(audit, o);
  audit->add_flag("--positivity-shift", o.positivity_shift,
                  "Shift every component to strictly positive scores before "
                  "composing");
  audit->add_option("--report", report_format, "Report format")
      ->check(CLI::IsMember({"md", "csv"}))
      ->capture_default_str();
  audit->add_option("--out", o.out, "Write the report here (default stdout)");

  CLI::App* fix = app.add_subcommand(
      "fix", "Apply per-component transforms and write the fixed table");
  add_input_flags(fix, o);
  add_ranking_flags(fix, o);
  add_seed_flag(fix, o);
  add_fix_flags(fix, o);
  fix->add_option("--out", o.out, "Write the fixed CSV here (default stdout)");

  CLI::App* headroom = app.add_subcommand(
      "headroom", "Rank component subsets by fairness improvement");
  add_input_flags(headroom, o);
  add_ranking_flags(headroom, o);
  add_seed_flag(headroom, o);
  add_fix_flags(headroom, o);
  headroom->add_option("--subsets", subsets_spec,
                       "singletons, all, or explicit like 0,1,0+1")
      ->capture_default_str();
  headroom->add_option("--out", o.out, "Write the table here (default stdout)");

  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a synthetic dataset or a built-in fixture");
  synth->add_option("--dataset", dataset,
                    "s1, s2, motivating, epsilon, norm-failure, pairwise")
      ->capture_default_str();
  synth->add_option("--n", synth_n, "Items per group for s1/s2")
      ->capture_default_str();
  synth->add_option("--a", eps_a, "epsilon fixture: base score a")
      ->capture_default_str();
  synth->add_option("--eps", eps_eps, "epsilon fixture: offset eps")
      ->capture_default_str();
  add_seed_flag(synth, o);
  synth->add_option("--out", o.out, "Write the CSV here (default stdout)");

  CLI::App* curve = app.add_subcommand(
      "curve", "Exposure gap versus top-t position cutoff");
  add_input_flags(curve, o);
  add_ranking_flags(curve, o);
  add_seed_flag(curve, o);
  curve->add_option("--t", t_spec, "Positions: start:stop:step or t1,t2,...")
      ->required();
  curve->add_option("--random-runs", random_runs,
                    "Add a mean random-ordering reference over this many runs")
      ->capture_default_str();
  curve->add_option("--out", o.out, "Write the CSV here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    resolve_seed(o);
    if (audit->parsed()) return cmd_audit(o, report_format);
    if (fix->parsed()) return cmd_fix(o);
    if (headroom->parsed()) return cmd_headroom(o, subsets_spec);
    if (synth->parsed()) return cmd_synth(o, dataset, synth_n, eps_a, eps_eps);
    if (curve->parsed()) return cmd_curve(o, t_spec, random_runs);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
