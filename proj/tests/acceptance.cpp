// End-to-end acceptance checks for the fairchain toolkit. Each criterion
// prints exactly one PASS/FAIL line; the process exits nonzero if any
// selected criterion fails. Run a single criterion with --criterion N.
//
// Exact-equality assertions (== on doubles) are deliberate: those criteria
// cover identities the library promises bit-for-bit, not approximations.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fairchain/counterfactual.hpp"
#include "fairchain/datagen.hpp"
#include "fairchain/dataset.hpp"
#include "fairchain/error.hpp"
#include "fairchain/fixes.hpp"
#include "fairchain/ingest.hpp"
#include "fairchain/metrics.hpp"
#include "fairchain/ranking.hpp"
#include "fairchain/rng.hpp"
#include "oracles.hpp"
#include "testdata.hpp"

using namespace fairchain;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void note(const std::string& what) {
    if (!notes_.empty()) notes_ += ", ";
    notes_ += what;
  }
  Outcome finish() const {
    return {pass_, pass_ ? notes_ : failures_};
  }

 private:
  bool pass_ = true;
  std::string failures_;
  std::string notes_;
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

double composite_gap(const ScoredDataset& ds) {
  const Ranking r = rank(compose(ds).values, TiePolicy::rank_share);
  return exposure_gap(ds, r, UtilityFn::power(0.65), std::nullopt).signed_gap;
}

ScoredDataset with_fix(const ScoredDataset& ds, int k, FixMethod method) {
  FixConfig cfg;
  return ds.with_component(k, apply_fix(ds, k, method, cfg).scores);
}

ScoredDataset with_fix_all(const ScoredDataset& ds, FixMethod method) {
  ScoredDataset out = ds;
  for (int k = 0; k < ds.components(); ++k) out = with_fix(out, k, method);
  return out;
}

// ------------------------------------------------------------------ 1

// The four-book example: each stage splits its top-2 evenly, their product
// hands the whole top-2 to one group.
Outcome criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const ScoredDataset ds = motivating_example();
  const UtilityFn flat = UtilityFn::power(0.0);
  Check c;
  for (int k = 0; k < ds.components(); ++k) {
    const auto rep = exposure_gap(ds, rank(ds.component(k),
                                           TiePolicy::rank_share),
                                  flat, 2);
    c.require(rep.signed_gap == 0.0,
              "component " + std::to_string(k) + " top-2 gap " +
                  num(rep.signed_gap) + " != 0");
  }
  const auto rep = exposure_gap(
      ds, rank(compose(ds).values, TiePolicy::rank_share), flat, 2);
  c.require(rep.abs_gap == 1.0, "composed top-2 gap " + num(rep.abs_gap));
  const double ms = elapsed_ms(start);
  c.require(ms < 1.0, "took " + num(ms) + " ms (budget 1 ms)");
  c.note("component gaps 0, composed gap 1, " + num(ms) + " ms");
  return c.finish();
}

// ------------------------------------------------------------------ 2

// The two-parameter family behind the four-book example: for any a > 0,
// eps > 0, both components are top-2 fair and the product is maximally
// unfair.
Outcome criterion_2() {
  Rng rng(20260814);
  const UtilityFn flat = UtilityFn::power(0.0);
  Check c;
  for (int trial = 0; trial < 50; ++trial) {
    const double a = 0.1 + rng.uniform01() * 9.9;
    const double eps = a * (0.01 + rng.uniform01() * 0.99);
    const ScoredDataset ds = epsilon_example(a, eps);
    for (int k = 0; k < 2; ++k) {
      const auto rep = exposure_gap(ds, rank(ds.component(k),
                                             TiePolicy::rank_share),
                                    flat, 2);
      c.require(rep.signed_gap == 0.0,
                "trial " + std::to_string(trial) + " component " +
                    std::to_string(k) + " gap != 0 at a=" + num(a) +
                    " eps=" + num(eps));
    }
    const auto rep = exposure_gap(
        ds, rank(compose(ds).values, TiePolicy::rank_share), flat, 2);
    c.require(rep.abs_gap == 1.0,
              "trial " + std::to_string(trial) + " composed gap " +
                  num(rep.abs_gap) + " != 1");
  }
  c.note("50 (a, eps) draws: component gaps 0, composed gaps 1, exact");
  return c.finish();
}

// ------------------------------------------------------------------ 3

// Pairwise analogue: both components pairwise-fair, the product ranks every
// clicked item of one group below the other group's unclicked items.
Outcome criterion_3() {
  const ScoredDataset ds = pairwise_counterexample();
  const auto rep = pairwise_gap(compose(ds).values, ds);
  Check c;
  c.require(rep.acc_A_over_B == 0.0,
            "acc[A>B] " + num(rep.acc_A_over_B) + " != 0");
  c.require(rep.acc_B_over_A == 0.5,
            "acc[B>A] " + num(rep.acc_B_over_A) + " != 0.5");
  c.require(rep.gap == 0.5, "gap " + num(rep.gap) + " != 0.5");
  c.note("composed accuracies 0.000000/0.500000, gap 0.500000, exact");
  return c.finish();
}

// ------------------------------------------------------------------ 4

// Marginal matching equalizes the matched component's group score multisets
// (equal group sizes), so its exposure gap vanishes identically under
// rank-share ties.
Outcome criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(4100);
  Check c;
  for (int trial = 0; trial < 100; ++trial) {
    testdata::RandomSpec spec;
    spec.n_a = spec.n_b = 1 + rng.bounded(250);
    spec.components = 1 + static_cast<int>(rng.bounded(3));
    spec.labels = rng.bounded(2) == 1;
    spec.integer_scores = rng.bounded(2) == 1;
    spec.grid = 6;
    const ScoredDataset ds = testdata::make_random(rng, spec);
    for (int k = 0; k < ds.components(); ++k) {
      const ScoredDataset fixed = with_fix(ds, k, FixMethod::marginal_match);
      const auto rep = exposure_gap(
          fixed, rank(fixed.component(k), TiePolicy::rank_share),
          UtilityFn::power(0.65), std::nullopt);
      c.require(rep.signed_gap == 0.0,
                "trial " + std::to_string(trial) + " component " +
                    std::to_string(k) + " gap " + num(rep.signed_gap));
    }
  }
  const double ms = elapsed_ms(start);
  c.require(ms < 1000.0, "took " + num(ms) + " ms (budget 1 s)");
  c.note("100 datasets, every matched component gap exactly 0, " + num(ms) +
         " ms");
  return c.finish();
}

// ------------------------------------------------------------------ 5

// Delta matching reassigns one direction's score deltas to the other's, so
// the matched component's pairwise gap vanishes identically.
Outcome criterion_5() {
  Rng rng(5100);
  Check c;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t q = 1 + rng.bounded(10);
    const int comps = 1 + static_cast<int>(rng.bounded(2));
    const int grid = 3 + static_cast<int>(rng.bounded(8));
    const ScoredDataset ds = testdata::make_equal_quadrants(rng, q, comps, grid);
    for (int k = 0; k < comps; ++k) {
      const FixedComponent fc = delta_match(ds, k);
      const auto rep = component_pairwise_report(ds, fc);
      c.require(rep.gap == 0.0, "trial " + std::to_string(trial) +
                                    " component " + std::to_string(k) +
                                    " gap " + num(rep.gap));
    }
  }
  c.note("100 equal-quadrant datasets, matched pairwise gap exactly 0");
  return c.finish();
}

// ------------------------------------------------------------------ 6

// Components whose group-conditional log-scores are symmetric with equal
// medians: the product keeps equal composed log-medians, and the composed
// ranking splits its top half evenly up to sampling noise.
Outcome criterion_6() {
  const std::size_t n = 10000;
  Rng rng(61);
  ScoredDataset::Builder b(2);
  for (std::size_t i = 0; i < n; ++i) {
    b.add("a" + std::to_string(i), "a", std::nullopt,
          {std::exp(rng.normal(0.0, 0.8)), std::exp(rng.normal(0.0, 1.1))});
  }
  for (std::size_t i = 0; i < n; ++i) {
    b.add("b" + std::to_string(i), "b", std::nullopt,
          {std::exp(rng.normal(0.0, 1.3)), std::exp(rng.normal(0.0, 0.6))});
  }
  const ScoredDataset ds = b.build();
  const auto composite = compose(ds).values;

  auto group_logs = [&](int g) {
    std::vector<double> out;
    for (std::size_t i : ds.group_items(g)) out.push_back(std::log(composite[i]));
    return out;
  };
  auto sd_of = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    return std::sqrt(var / static_cast<double>(v.size() - 1));
  };
  const auto la = group_logs(0), lb = group_logs(1);
  const double med_diff = std::fabs(median(la) - median(lb));
  // Large-sample standard error of a sample median: 1.2533 sd / sqrt(n).
  const double se = 1.2533 * std::hypot(sd_of(la), sd_of(lb)) /
                    std::sqrt(static_cast<double>(n));
  Check c;
  c.require(med_diff < 3.0 * se, "log-median diff " + num(med_diff) +
                                     " >= 3 SE (" + num(3.0 * se) + ")");
  const auto rep = exposure_gap(
      ds, rank(composite, TiePolicy::rank_share), UtilityFn::power(0.0), n);
  c.require(rep.abs_gap < 0.02,
            "top-half flat gap " + num(rep.abs_gap) + " >= 0.02");
  c.note("log-median diff " + num(med_diff) + " < 3 SE, top-half gap " +
         num(rep.abs_gap));
  return c.finish();
}

// ------------------------------------------------------------------ 7 & 8

struct Ladder {
  double baseline = 0.0;
  double match_both = 0.0;
  double norm_single = 0.0;
  double norm_both = 0.0;
};

// Median |composite exposure gap| over seeds 1..10 for the standard fix
// ladder. norm_component: which column the single-normalization row touches.
Ladder median_ladder(ScoredDataset (*gen)(std::size_t, std::uint64_t),
                     int norm_component) {
  std::vector<double> base, mb, ns, nb;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ScoredDataset ds = gen(1000, seed);
    base.push_back(composite_gap(ds));
    mb.push_back(composite_gap(with_fix_all(ds, FixMethod::marginal_match)));
    ns.push_back(
        composite_gap(with_fix(ds, norm_component, FixMethod::normalize)));
    nb.push_back(composite_gap(with_fix_all(ds, FixMethod::normalize)));
  }
  return {std::fabs(median(base)), std::fabs(median(mb)),
          std::fabs(median(ns)), std::fabs(median(nb))};
}

// Independent-component synthetic benchmark: baseline is wide, matching both
// stages closes it, normalizing only the second stage leaves a residue,
// normalizing both closes it again.
Outcome criterion_7() {
  const auto start = std::chrono::steady_clock::now();
  const Ladder t = median_ladder(gen_synthetic_1, 1);
  Check c;
  c.require(std::fabs(t.baseline - 0.5281) <= 0.05,
            "baseline " + num(t.baseline) + " not within 0.5281 +/- 0.05");
  c.require(t.match_both <= 0.05,
            "match-both " + num(t.match_both) + " > 0.05");
  c.require(std::fabs(t.norm_single - 0.094) <= 0.05,
            "normalize-single " + num(t.norm_single) +
                " not within 0.094 +/- 0.05");
  c.require(t.norm_both <= 0.05,
            "normalize-both " + num(t.norm_both) + " > 0.05");
  const double ms = elapsed_ms(start);
  c.require(ms < 5000.0, "took " + num(ms) + " ms (budget 5 s)");
  c.note("medians: baseline " + num(t.baseline) + ", match-both " +
         num(t.match_both) + ", normalize-single " + num(t.norm_single) +
         ", normalize-both " + num(t.norm_both) + ", " + num(ms) + " ms");
  return c.finish();
}

// Anti-correlated variant: every fix leaves a wider gap than it does on the
// independent benchmark, and normalization falls behind matching.
Outcome criterion_8() {
  const Ladder t1 = median_ladder(gen_synthetic_1, 1);
  const Ladder t2 = median_ladder(gen_synthetic_2, 1);
  Check c;
  c.require(std::fabs(t2.baseline - 0.5398) <= 0.05,
            "baseline " + num(t2.baseline) + " not within 0.5398 +/- 0.05");
  c.require(t2.match_both < t2.baseline,
            "match-both " + num(t2.match_both) + " !< baseline " +
                num(t2.baseline));
  c.require(t2.norm_both > t2.match_both,
            "normalize-both " + num(t2.norm_both) + " !> match-both " +
                num(t2.match_both));
  c.require(t2.baseline > t1.baseline,
            "baseline " + num(t2.baseline) + " !> " + num(t1.baseline));
  c.require(t2.match_both > t1.match_both,
            "match-both " + num(t2.match_both) + " !> " + num(t1.match_both));
  c.require(t2.norm_single > t1.norm_single,
            "normalize-single " + num(t2.norm_single) + " !> " +
                num(t1.norm_single));
  c.require(t2.norm_both > t1.norm_both,
            "normalize-both " + num(t2.norm_both) + " !> " + num(t1.norm_both));
  c.note("medians: baseline " + num(t2.baseline) + ", match-both " +
         num(t2.match_both) + ", normalize-single " + num(t2.norm_single) +
         ", normalize-both " + num(t2.norm_both) +
         "; every row above the independent benchmark");
  return c.finish();
}

// ------------------------------------------------------------------ 9

std::string german_path() {
  const char* env = std::getenv("GERMAN_CREDIT_PATH");
  if (env != nullptr && *env != '\0') return env;
  return std::string(FAIRCHAIN_TEST_DATA) + "/german.data";
}

Outcome criterion_9() {
  const std::string path = german_path();
  if (!std::ifstream(path).good()) {
    return {false,
            "dataset not present: put the UCI statlog file at " + path +
                " or point GERMAN_CREDIT_PATH at it (no bundled copy; the "
                "build environment has no network access)"};
  }
  const auto start = std::chrono::steady_clock::now();
  const ScoredDataset ds = load_german_credit(path);
  Check c;
  c.require(ds.group_size(ds.group_index("male")) == 690,
            "male group size != 690");
  c.require(ds.group_size(ds.group_index("female")) == 310,
            "female group size != 310");

  const ScoredDataset eq = equalize_groups(ds, compose(ds));
  const double baseline = std::fabs(composite_gap(eq));
  c.require(std::fabs(baseline - 0.2162) <= 0.02,
            "equal-size baseline " + num(baseline) +
                " not within 0.2162 +/- 0.02");

  const double matched =
      std::fabs(composite_gap(with_fix_all(eq, FixMethod::marginal_match)));
  c.require(std::fabs(matched - 0.0705) <= 0.02,
            "all-components match " + num(matched) +
                " not within 0.0705 +/- 0.02");

  CounterfactualSpec spec;
  spec.fix.methods.assign(static_cast<std::size_t>(eq.components()),
                          FixMethod::marginal_match);
  const HeadroomTable table = headroom_sweep(eq, spec, SubsetMode::singletons);
  const auto& names = german_credit_components();
  std::vector<std::string> got;
  for (const auto& row : table.rows) {
    got.push_back(names[static_cast<std::size_t>(row.subset.front())]);
  }
  const std::vector<std::string> want = {"credit_amount", "age", "num_liable",
                                         "num_credits"};
  std::string got_str;
  for (const auto& g : got) got_str += (got_str.empty() ? "" : " > ") + g;
  c.require(got == want, "improvement order " + got_str);

  const double ms = elapsed_ms(start);
  c.require(ms < 2000.0, "took " + num(ms) + " ms (budget 2 s)");
  c.note("690/310, equal-size baseline " + num(baseline) + ", matched " +
         num(matched) + ", order " + got_str + ", " + num(ms) + " ms");
  return c.finish();
}

// ------------------------------------------------------------------ 10

// The constant-p probe makes any single component pairwise-exact for every
// p > 1/2, and stays exact when every component is replaced. Production
// numbers for this probe come from proprietary data and are out of scope;
// the seeded regression below covers the qualitative claim that a stronger
// probe cannot widen the composed gap.
Outcome criterion_10() {
  Rng rng(1010);
  const ScoredDataset ds = testdata::make_labeled_signal(rng, 200, 3);
  Check c;
  for (const double p : {0.51, 0.9, 0.99}) {
    FixConfig cfg;
    cfg.p = p;
    std::map<int, std::vector<double>> all;
    for (int k = 0; k < 3; ++k) {
      const FixedComponent fc = apply_fix(ds, k, FixMethod::constant_p, cfg);
      const auto rep = pairwise_gap(fc.scores, ds);
      c.require(rep.acc_A_over_B == 1.0 && rep.acc_B_over_A == 1.0 &&
                    rep.gap == 0.0,
                "p=" + num(p) + " component " + std::to_string(k) +
                    " not exact");
      all[k] = fc.scores;
    }
    const auto rep = pairwise_gap(compose(ds, all).values, ds);
    c.require(rep.acc_A_over_B == 1.0 && rep.acc_B_over_A == 1.0 &&
                  rep.gap == 0.0,
              "p=" + num(p) + " all-components composite not exact");
  }

  auto gap_with_probe = [&](double p) {
    FixConfig cfg;
    cfg.p = p;
    const FixedComponent fc = apply_fix(ds, 0, FixMethod::constant_p, cfg);
    return pairwise_gap(compose(ds, {{0, fc.scores}}).values, ds).gap;
  };
  const double strong = gap_with_probe(0.99);
  const double weak = gap_with_probe(0.51);
  c.require(strong <= weak, "composed gap at p=0.99 (" + num(strong) +
                                ") > at p=0.51 (" + num(weak) + ")");
  c.note("exact at p in {0.51, 0.9, 0.99}; one-component composed gap " +
         num(strong) + " (p=0.99) <= " + num(weak) + " (p=0.51)");
  return c.finish();
}

// ------------------------------------------------------------------ 11

Outcome criterion_11() {
  Rng rng(1100);
  const UtilityFn utilities[] = {UtilityFn::power(0.0), UtilityFn::power(0.65),
                                 UtilityFn::power(1.0),
                                 UtilityFn::log_discount()};
  Check c;
  int exposure_checks = 0, pairwise_checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    testdata::RandomSpec spec;
    spec.n_a = 1 + rng.bounded(100);
    spec.n_b = 1 + rng.bounded(100);
    spec.components = 1 + static_cast<int>(rng.bounded(3));
    spec.labels = rng.bounded(2) == 1;
    spec.integer_scores = rng.bounded(2) == 1;
    spec.grid = 5;
    const ScoredDataset ds = testdata::make_random(rng, spec);
    const UtilityFn u = utilities[trial % 4];
    std::optional<std::size_t> top_n;
    if (rng.bounded(2) == 1) top_n = 1 + rng.bounded(ds.size());

    std::vector<std::vector<double>> columns;
    columns.push_back(oracles::compose(ds));
    for (int k = 0; k < ds.components(); ++k) columns.push_back(ds.component(k));
    const auto label = [&](std::size_t ci) {
      return "trial " + std::to_string(trial) +
             (ci == 0 ? " composite" : " component " + std::to_string(ci - 1));
    };

    // The library composes identically to an independent product loop.
    c.require(compose(ds).values == columns[0], label(0) + " product differs");

    for (std::size_t ci = 0; ci < columns.size(); ++ci) {
      const auto& scores = columns[ci];
      const auto want = oracles::exposure_gap(ds, scores, u, top_n);
      if (!want.defined) {
        bool threw = false;
        try {
          exposure_gap(ds, rank(scores, TiePolicy::rank_share), u, top_n);
        } catch (const UndefinedGapError&) {
          threw = true;
        }
        c.require(threw, label(ci) + " empty cut not rejected");
        continue;
      }
      const auto got =
          exposure_gap(ds, rank(scores, TiePolicy::rank_share), u, top_n);
      ++exposure_checks;
      c.require(got.exposure_A == want.exposure_A &&
                    got.exposure_B == want.exposure_B &&
                    got.exposure_share_A == want.share_A &&
                    got.exposure_share_B == want.share_B &&
                    got.signed_gap == want.signed_gap &&
                    got.abs_gap == want.abs_gap,
                label(ci) + " exposure mismatch");

      if (!ds.has_labels()) continue;
      const bool quadrants_full =
          !ds.quadrant(0, 0).empty() && !ds.quadrant(0, 1).empty() &&
          !ds.quadrant(1, 0).empty() && !ds.quadrant(1, 1).empty();
      for (const bool half : {false, true}) {
        if (!quadrants_full) {
          bool threw = false;
          try {
            pairwise_gap(scores, ds, PairwiseOptions{half});
          } catch (const UndefinedAccuracyError&) {
            threw = true;
          }
          c.require(threw, label(ci) + " empty quadrant not rejected");
          continue;
        }
        const auto got_pw = pairwise_gap(scores, ds, PairwiseOptions{half});
        const double want_ab = oracles::pairwise_acc_a_over_b(ds, scores, half);
        const double want_ba = oracles::pairwise_acc_b_over_a(ds, scores, half);
        ++pairwise_checks;
        c.require(got_pw.acc_A_over_B == want_ab &&
                      got_pw.acc_B_over_A == want_ba &&
                      got_pw.gap == std::fabs(want_ab - want_ba),
                  label(ci) + " pairwise mismatch" +
                      (half ? " (half credit)" : ""));
      }
    }
  }
  c.note(std::to_string(exposure_checks) + " exposure and " +
         std::to_string(pairwise_checks) +
         " pairwise evaluations bit-identical to enumeration");
  return c.finish();
}

// ------------------------------------------------------------------ 12

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(FAIRCHAIN_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_12() {
  Check c;
  // A score table for the commands that need an input file.
  c.require(run_cli("synth --dataset s1 --n 80 --seed 9 --out acc12_in.csv") ==
                0,
            "input synthesis failed");
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"synth-s1", "synth --dataset s1 --n 50 --seed 9"},
      {"synth-s2", "synth --dataset s2 --n 50 --seed 9"},
      {"synth-eps", "synth --dataset epsilon --a 1.5 --eps 0.25"},
      {"audit-csv", "audit acc12_in.csv --report csv --top-n 25 --seed 4"},
      {"audit-md", "audit acc12_in.csv --w 0.3"},
      {"audit-ties", "audit acc12_in.csv --ties random --seed 11"},
      {"fix", "fix acc12_in.csv --fix all=normalize --positivity-shift"},
      {"headroom", "headroom acc12_in.csv --subsets all"},
      {"curve", "curve acc12_in.csv --t 5:50:5 --random-runs 4 --seed 3"},
  };
  int verified = 0;
  for (const auto& [name, args] : commands) {
    const std::string f1 = "acc12_" + name + "_1.out";
    const std::string f2 = "acc12_" + name + "_2.out";
    const bool ok1 = run_cli(args + " --out " + f1) == 0;
    const bool ok2 = run_cli(args + " --out " + f2) == 0;
    c.require(ok1 && ok2, name + " exited nonzero");
    if (ok1 && ok2) {
      const auto b1 = slurp(f1), b2 = slurp(f2);
      c.require(b1 && b2 && !b1->empty() && *b1 == *b2,
                name + " reruns differ");
      if (b1 && b2 && *b1 == *b2) ++verified;
    }
    std::remove(f1.c_str());
    std::remove(f2.c_str());
  }
  std::remove("acc12_in.csv");
  c.note(std::to_string(verified) + "/" + std::to_string(commands.size()) +
         " commands byte-identical across reruns");
  return c.finish();
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "motivating example: fair stages, unfair product", criterion_1},
    {2, "two-parameter family keeps the product maximally unfair", criterion_2},
    {3, "pairwise counterexample: 0.0/0.5 composed accuracies", criterion_3},
    {4, "marginal match zeroes the matched exposure gap", criterion_4},
    {5, "delta match zeroes the matched pairwise gap", criterion_5},
    {6, "symmetric log-score components compose evenly", criterion_6},
    {7, "independent synthetic benchmark: fix ladder medians", criterion_7},
    {8, "anti-correlated benchmark: fixes degrade, order holds", criterion_8},
    {9, "german credit audit and improvement ordering", criterion_9},
    {10, "constant-p probe exactness and monotonicity", criterion_10},
    {11, "metrics match exhaustive enumeration bit-for-bit", criterion_11},
    {12, "CLI reruns are byte-identical", criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  for (const auto& criterion : kCriteria) {
    if (only != 0 && criterion.id != only) continue;
    const Outcome outcome = criterion.run();
    all_pass = all_pass && outcome.pass;
    std::printf("criterion %2d [%s] %s%s%s\n", criterion.id,
                outcome.pass ? "PASS" : "FAIL", criterion.name,
                outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
