// Command-line laboratory for Fourier sampling of shifted subsets on the
// boolean cube: exact Krawtchouk values and outcome distributions, state
// simulation, structure-recovery experiments, the black-box separation
// demo, and sample-count bounds. Every experiment is a pure function of its
// flags; --seed pins all randomness.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cubeshift/bounds.hpp"
#include "cubeshift/distributions.hpp"
#include "cubeshift/errors.hpp"
#include "cubeshift/krawtchouk.hpp"
#include "cubeshift/oracle.hpp"
#include "cubeshift/recovery.hpp"
#include "cubeshift/sampler.hpp"
#include "cubeshift/subset.hpp"

using namespace cubeshift;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInconclusive = 4;

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ordered_json rational_json(const Rational& q) {
  return ordered_json{{"num", to_string(numerator(q))},
                      {"den", to_string(denominator(q))},
                      {"approx", to_double(q)}};
}

// Shared subset-selection flags. Exactly one variant must be given.
struct SpecFlags {
  int n = 0;
  std::optional<long> sphere;
  std::optional<long> ball;
  std::string parity;      // bit string t
  std::string set_points;  // comma-separated bit strings
  std::string junta_vars;  // e.g. "1,2" with --junta-truth
  std::string junta_truth;
  std::string gp_prefix;  // bit string t on the first k bits
  std::uint64_t gp_suffix_seed = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "cube dimension")->required();
    cmd->add_option("--sphere", sphere, "Hamming sphere of this radius");
    cmd->add_option("--ball", ball, "Hamming ball of this radius");
    cmd->add_option("--parity", parity, "parity set with this mask, e.g. 101");
    cmd->add_option("--set", set_points,
                    "explicit subset: comma-separated bit strings");
    cmd->add_option("--junta-vars", junta_vars,
                    "junta variables, e.g. 1,3 (with --junta-truth)");
    cmd->add_option("--junta-truth", junta_truth,
                    "junta truth table bits, e.g. 0110");
    cmd->add_option("--gen-parity", gp_prefix,
                    "generalised parity: hidden prefix bits t");
    cmd->add_option("--gen-parity-suffix-seed", gp_suffix_seed,
                    "seed for the arbitrary suffix function");
  }

  SubsetSpec build() const {
    int given = 0;
    given += sphere.has_value();
    given += ball.has_value();
    given += !parity.empty();
    given += !set_points.empty();
    given += !junta_vars.empty();
    given += !gp_prefix.empty();
    if (given != 1)
      throw CLI::ValidationError(
          "spec", "give exactly one of --sphere/--ball/--parity/--set/"
                  "--junta-vars/--gen-parity");
    if (sphere) return SubsetSpec(n, Sphere{*sphere});
    if (ball) return SubsetSpec(n, Ball{*ball});
    if (!parity.empty()) return SubsetSpec(n, ParitySet{parse_bits(parity, n)});
    if (!set_points.empty()) {
      std::vector<std::uint64_t> elems;
      std::string token;
      for (char c : set_points + ",") {
        if (c == ',') {
          if (!token.empty()) elems.push_back(parse_bits(token, n));
          token.clear();
        } else {
          token += c;
        }
      }
      return SubsetSpec(n, ExplicitSet{elems});
    }
    if (!junta_vars.empty()) {
      Junta junta;
      std::string token;
      for (char c : junta_vars + ",") {
        if (c == ',') {
          if (!token.empty()) junta.vars.push_back(std::stoi(token));
          token.clear();
        } else {
          token += c;
        }
      }
      for (char c : junta_truth) junta.truth.push_back(c == '1');
      return SubsetSpec(n, junta);
    }
    const int k = static_cast<int>(gp_prefix.size());
    GeneralisedParity gp;
    gp.prefix_len = k;
    gp.prefix_mask = parse_bits(gp_prefix, k);
    RngState rng(gp_suffix_seed, 0xF5);
    gp.suffix_truth.resize(1ULL << (n - k));
    for (auto& b : gp.suffix_truth) b = rng.next_below(2);
    return SubsetSpec(n, gp);
  }
};

void emit_weight_distribution(const WeightDistribution& dist,
                              const std::string& format,
                              const std::string& kind) {
  if (format == "csv") {
    std::cout << "weight,numerator,denominator,approx\n";
    for (int w = 0; w <= dist.n; ++w) {
      const auto& p = dist.probs[w];
      std::cout << w << "," << to_string(numerator(p)) << ","
                << to_string(denominator(p)) << "," << fmt_double(to_double(p))
                << "\n";
    }
    return;
  }
  if (format == "plain") {
    for (int w = 0; w <= dist.n; ++w)
      std::cout << w << " " << to_string(dist.probs[w]) << "\n";
    return;
  }
  ordered_json out;
  out["kind"] = kind;
  out["n"] = dist.n;
  out["entries"] = ordered_json::array();
  for (int w = 0; w <= dist.n; ++w) {
    const auto& p = dist.probs[w];
    out["entries"].push_back(ordered_json{{"weight", w},
                                          {"num", to_string(numerator(p))},
                                          {"den", to_string(denominator(p))},
                                          {"approx", to_double(p)}});
  }
  std::cout << out.dump(2) << "\n";
}

void emit_cube_distribution(const CubeDistribution& dist,
                            const std::string& format) {
  if (format == "csv") {
    std::cout << "bitstring,numerator,denominator,approx\n";
    for (std::uint64_t z = 0; z < dist.charsums().size(); ++z) {
      const auto p = dist.prob(z);
      std::cout << format_bits(z, dist.n()) << "," << to_string(numerator(p))
                << "," << to_string(denominator(p)) << ","
                << fmt_double(to_double(p)) << "\n";
    }
    return;
  }
  if (format == "plain") {
    for (std::uint64_t z = 0; z < dist.charsums().size(); ++z)
      std::cout << format_bits(z, dist.n()) << " "
                << to_string(dist.prob(z)) << "\n";
    return;
  }
  ordered_json out;
  out["kind"] = "cube";
  out["n"] = dist.n();
  out["entries"] = ordered_json::array();
  for (std::uint64_t z = 0; z < dist.charsums().size(); ++z) {
    const auto p = dist.prob(z);
    out["entries"].push_back(ordered_json{{"bits", format_bits(z, dist.n())},
                                          {"num", to_string(numerator(p))},
                                          {"den", to_string(denominator(p))},
                                          {"approx", to_double(p)}});
  }
  std::cout << out.dump(2) << "\n";
}

int run_kraw(long n, long r, long x, bool table, const std::string& format) {
  if (table) {
    KrawtchoukTable t(n);
    if (format == "json") {
      ordered_json out;
      out["n"] = n;
      out["rows"] = ordered_json::array();
      for (long rr = 0; rr <= n; ++rr) {
        ordered_json row = ordered_json::array();
        for (long xx = 0; xx <= n; ++xx) row.push_back(to_string(t.at(rr, xx)));
        out["rows"].push_back(row);
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (long rr = 0; rr <= n; ++rr) {
        for (long xx = 0; xx <= n; ++xx)
          std::cout << to_string(t.at(rr, xx)) << (xx == n ? "" : " ");
        std::cout << "\n";
      }
    }
    return 0;
  }
  const BigInt v = kraw_direct(n, r, x);
  if (format == "json") {
    ordered_json out{{"n", n}, {"r", r}, {"x", x}, {"value", to_string(v)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(v) << "\n";
  }
  return 0;
}

struct TrialRecord {
  long trial = 0;
  std::string truth;
  std::string recovered;
  long samples_used = 0;
  bool correct = false;
  bool inconclusive = false;
};

void emit_trials(const std::vector<TrialRecord>& records,
                 const std::string& format) {
  if (format == "csv") {
    std::cout << "trial,true,recovered,samples_used,correct,inconclusive\n";
    for (const auto& r : records)
      std::cout << r.trial << "," << r.truth << "," << r.recovered << ","
                << r.samples_used << "," << (r.correct ? "true" : "false")
                << "," << (r.inconclusive ? "true" : "false") << "\n";
    return;
  }
  for (const auto& r : records) {
    ordered_json rec;
    rec["trial"] = r.trial;
    rec["true"] = r.truth;
    rec["recovered"] = r.recovered;
    rec["samples_used"] = r.samples_used;
    rec["correct"] = r.correct;
    if (r.inconclusive) rec["inconclusive"] = true;
    std::cout << rec.dump() << "\n";
  }
}

int run_recover(const std::string& problem, const SpecFlags& flags, int true_r,
                std::uint64_t seed, long trials, double budget_mult,
                const Rational& eps, const std::string& format) {
  SampleBudget budget;
  budget.multiplier = budget_mult;
  long inconclusive = 0;
  std::vector<TrialRecord> records;
  for (long trial = 0; trial < trials; ++trial) {
    RngState rng(seed, trial);
    TrialRecord rec;
    rec.trial = trial;
    try {
      if (problem == "sphere" || problem == "parity-bit") {
        WeightSampler sampler(pi_sphere(flags.n, true_r));
        auto draw = [&]() { return sampler.sample(rng); };
        if (problem == "sphere") {
          const auto res = recover_radius(flags.n, draw, budget);
          rec.truth = std::to_string(true_r);
          rec.recovered = std::to_string(res.radius);
          rec.samples_used = res.samples_used;
          rec.correct = res.radius == true_r;
        } else {
          const auto res = recover_radius_parity(flags.n, draw, budget);
          rec.truth = std::to_string(true_r % 2);
          rec.recovered = std::to_string(res.parity_bit);
          rec.samples_used = res.samples_used;
          rec.correct = res.parity_bit == true_r % 2;
        }
      } else if (problem == "ball") {
        WeightSampler sampler(pi_ball(flags.n, true_r));
        const auto res = recover_ball_radius(
            flags.n, [&]() { return sampler.sample(rng); }, budget);
        rec.truth = std::to_string(true_r);
        rec.recovered = std::to_string(res.radius);
        rec.samples_used = res.samples_used;
        rec.correct = res.radius == true_r;
      } else {
        const auto spec = flags.build();
        const std::uint64_t shift = rng.next_below(1ULL << flags.n);
        FourierSampler sampler(make_shifted_state(spec, shift));
        auto draw = [&]() { return sampler.sample(rng); };
        if (problem == "size") {
          const auto res = estimate_size(flags.n, draw, eps, budget);
          const Rational truth =
              make_rational(spec.size(), BigInt(1) << flags.n);
          rec.truth = to_string(truth);
          rec.recovered = to_string(res.estimate);
          rec.samples_used = res.samples_used;
          rec.correct = abs(res.estimate - truth) <= eps;
        } else if (problem == "parity-set") {
          const auto res = recover_parity_set(flags.n, draw, budget);
          const auto truth = std::get<ParitySet>(spec.kind()).mask;
          rec.truth = format_bits(truth, flags.n);
          rec.recovered = format_bits(res.mask, flags.n);
          rec.samples_used = res.samples_used;
          rec.correct = res.mask == truth;
        } else {  // gen-parity
          const auto& gp = std::get<GeneralisedParity>(spec.kind());
          const auto res =
              recover_generalised_parity(flags.n, gp.prefix_len, draw, budget);
          rec.truth = format_bits(gp.prefix_mask, gp.prefix_len);
          rec.recovered = format_bits(res.mask, gp.prefix_len);
          rec.samples_used = res.samples_used;
          rec.correct = res.mask == gp.prefix_mask;
        }
      }
    } catch (const InconclusiveError&) {
      rec.inconclusive = true;
      ++inconclusive;
    }
    records.push_back(std::move(rec));
  }
  emit_trials(records, format);
  return inconclusive == trials && trials > 0 ? kExitInconclusive : 0;
}

int run_recover_junta(int n, const std::string& family_text, int hidden,
                      std::uint64_t seed, long trials, double budget_mult,
                      const std::string& format) {
  if (family_text.empty())
    throw CLI::ValidationError("--junta-family",
                               "required for --problem junta");
  std::vector<Junta> family;
  std::string group, token;
  RngState truth_rng(seed, 0xABCD);
  for (char c : family_text + ";") {
    if (c == ';') {
      if (group.empty()) continue;
      Junta junta;
      for (char g : group + ",") {
        if (g == ',') {
          if (!token.empty()) junta.vars.push_back(std::stoi(token));
          token.clear();
        } else {
          token += g;
        }
      }
      // seeded truth table, forced non-constant
      junta.truth.assign(1ULL << junta.vars.size(), 0);
      for (auto& b : junta.truth) b = truth_rng.next_below(2);
      junta.truth.front() = 0;
      junta.truth.back() = 1;
      family.push_back(std::move(junta));
      group.clear();
    } else {
      group += c;
    }
  }
  if (hidden < 0 || hidden >= static_cast<int>(family.size()))
    throw CLI::ValidationError("--junta-hidden", "index out of range");
  SampleBudget budget;
  budget.multiplier = budget_mult;
  long inconclusive = 0;
  std::vector<TrialRecord> records;
  for (long trial = 0; trial < trials; ++trial) {
    RngState rng(seed, trial);
    TrialRecord rec;
    rec.trial = trial;
    try {
      const SubsetSpec spec(n, family[hidden]);
      const FourierSampler sampler(
          make_shifted_state(spec, rng.next_below(1ULL << n)));
      const auto res = recover_junta(
          n, family, [&]() { return sampler.sample(rng); }, budget);
      rec.truth = std::to_string(hidden);
      rec.recovered = std::to_string(res.index);
      rec.samples_used = res.samples_used;
      rec.correct = res.index == hidden;
    } catch (const InconclusiveError&) {
      rec.inconclusive = true;
      ++inconclusive;
    }
    records.push_back(std::move(rec));
  }
  emit_trials(records, format);
  return inconclusive == trials && trials > 0 ? kExitInconclusive : 0;
}

int run_verify(long max_n, std::uint64_t seed, const std::string& format) {
  struct Row {
    const char* name;
    bool ok;
  };
  std::vector<Row> rows;

  bool ok = true;
  for (long n = 0; n <= max_n && ok; ++n) {
    KrawtchoukTable t(n);
    for (long x = 0; x <= n && ok; ++x) {
      const auto gf = kraw_gf_coefficients(n, x);
      for (long r = 0; r <= n && ok; ++r) {
        const BigInt d = kraw_direct(n, r, x);
        ok = d == t.at(r, x) && d == gf[r];
        if (n >= 1) ok = ok && d == kraw_row(n, r)[x];
      }
    }
  }
  rows.push_back({"krawtchouk evaluation routes agree", ok});

  ok = true;
  for (long n = 1; n <= max_n && ok; ++n) {
    KrawtchoukTable t(n);
    for (long r = 0; r <= n && ok; ++r)
      for (long x = 0; x <= n && ok; ++x) {
        const BigInt m = r % 2 == 0 ? t.at(r, n - x) : -t.at(r, n - x);
        ok = t.at(r, x) == m;
      }
  }
  rows.push_back({"reflection symmetry", ok});

  ok = true;
  for (long n = 2; n <= max_n && ok; ++n)
    for (long r = 1; r <= n && ok; ++r)
      for (long x = 1; x <= n - 1 && ok; ++x) {
        const auto [a, b] = kraw_recurrence_residuals(n, r, x);
        ok = a == 0 && b == 0;
      }
  rows.push_back({"recurrence residuals vanish", ok});

  ok = true;
  for (long n = 1; n <= max_n && ok; ++n)
    for (long r = 0; r <= n && ok; ++r)
      for (long x = 1; x <= n && ok; ++x) {
        const auto [lhs, rhs] = kraw_ball_identity(n, r, x);
        ok = lhs == rhs;
      }
  rows.push_back({"ball sum identity", ok});

  ok = true;
  for (long n = 1; n <= max_n && ok; ++n)
    for (long r = 0; 2 * r <= n && ok; ++r) {
      const auto dist = pi_sphere(n, r);
      const auto closed = central_probs(n, r);
      if (n % 2 == 0)
        ok = *closed.center == dist.probs[n / 2] &&
             closed.flank == dist.probs[n / 2 - 1] + dist.probs[n / 2 + 1];
      else
        ok = closed.flank == dist.probs[(n - 1) / 2] + dist.probs[(n + 1) / 2];
      ok = ok && dist.total() == 1;
    }
  rows.push_back({"central outcome closed forms", ok});

  ok = true;
  for (long n = 4; n <= max_n && ok; n += 2)
    for (long r = 0; r <= n / 2 - 2 && ok; r += 2)
      ok = center_gap_even(n, r) ==
               pi_sphere(n, r).probs[n / 2] - pi_sphere(n, r + 2).probs[n / 2] &&
           center_gap_even(n, r) > 0;
  for (long n = 6; n <= max_n && ok; n += 2)
    for (long r = 1; r + 2 <= n / 2 && ok; r += 2)
      ok = flank_gap_even(n, r) ==
               central_probs(n, r + 2).flank - central_probs(n, r).flank &&
           flank_gap_even(n, r) > 0;
  for (long n = 7; n <= max_n && ok; n += 2)
    for (long r = 1; 2 * (r + 2) <= n && ok; r += 2)
      ok = flank_gap_odd(n, r) ==
               central_probs(n, r + 2).flank - central_probs(n, r).flank &&
           flank_gap_odd(n, r) > 0;
  rows.push_back({"probability gap formulas", ok});

  ok = true;
  {
    RngState rng(seed);
    for (int trial = 0; trial < 50 && ok; ++trial) {
      const int n = 4 + static_cast<int>(rng.next_below(3));
      std::vector<std::uint64_t> sa, sb;
      for (int i = 0; i < 4; ++i) {
        sa.push_back(rng.next_below(1ULL << n));
        sb.push_back(rng.next_below(1ULL << n));
      }
      std::sort(sa.begin(), sa.end());
      sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
      std::sort(sb.begin(), sb.end());
      sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
      const auto lb = hy_lower_bound(sa, sb, n);
      const auto t = trace_distance(pi_subset(SubsetSpec(n, ExplicitSet{sa})),
                                    pi_subset(SubsetSpec(n, ExplicitSet{sb})));
      ok = lb <= t;
    }
  }
  rows.push_back({"autocorrelation distance bound", ok});

  bool all = true;
  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
      out.push_back(ordered_json{{"check", row.name}, {"pass", row.ok}});
      all &= row.ok;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << (row.ok ? "PASS" : "FAIL") << "  " << row.name << "\n";
      all &= row.ok;
    }
  }
  return all ? 0 : 1;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"shifted-subset Fourier sampling laboratory"};
  app.require_subcommand(1);

  // kraw
  auto* kraw = app.add_subcommand("kraw", "exact Krawtchouk values");
  long kn = 0, kr = 0, kx = 0;
  bool ktable = false;
  std::string kformat = "plain";
  std::uint64_t kraw_seed = 0;
  kraw->add_option("--n", kn)->required();
  kraw->add_option("--r", kr);
  kraw->add_option("--x", kx);
  kraw->add_flag("--table", ktable, "print the whole table for this n");
  kraw->add_option("--format", kformat)->check(CLI::IsMember({"plain", "json"}));
  kraw->add_option("--seed", kraw_seed, "accepted for uniformity; exact output");

  // dist
  auto* dist = app.add_subcommand("dist", "exact outcome distributions");
  SpecFlags dist_flags;
  dist_flags.attach(dist);
  std::string dist_format = "json";
  bool dist_full = false;
  std::uint64_t dist_seed = 0;
  dist->add_option("--format", dist_format)
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  dist->add_flag("--full", dist_full,
                 "emit the full cube distribution instead of weights");
  dist->add_option("--seed", dist_seed, "accepted for uniformity; exact output");

  // sample
  auto* sample = app.add_subcommand("sample", "draw Fourier samples");
  SpecFlags sample_flags;
  sample_flags.attach(sample);
  std::string shift_bits;
  bool random_shift = false;
  long count = 10;
  std::uint64_t sample_seed = 1;
  bool weights_only = false;
  std::string sample_format = "lines";
  sample->add_option("--shift", shift_bits, "shift as a bit string");
  sample->add_flag("--random-shift", random_shift);
  sample->add_option("--count", count);
  sample->add_option("--seed", sample_seed);
  sample->add_flag("--weights-only", weights_only,
                   "sample Hamming weights via the exact weight distribution");
  sample->add_option("--format", sample_format,
                     "lines: one outcome per line; hist: weight histogram JSON")
      ->check(CLI::IsMember({"lines", "hist"}));

  // recover
  auto* recover = app.add_subcommand("recover", "structure recovery trials");
  SpecFlags rec_flags;
  std::string problem;
  int true_r = 0;
  std::uint64_t rec_seed = 1;
  long trials = 1;
  double budget_mult = 1.0;
  std::string eps_text = "0.05";
  std::string junta_family;
  int junta_hidden = 0;
  std::string rec_format = "json";
  recover->add_option("--problem", problem)
      ->required()
      ->check(CLI::IsMember({"sphere", "ball", "parity-bit", "junta", "size",
                             "parity-set", "gen-parity"}));
  rec_flags.attach(recover);
  recover->add_option("--true-r", true_r, "hidden radius for sphere/ball");
  recover->add_option("--seed", rec_seed);
  recover->add_option("--trials", trials);
  recover->add_option("--budget-multiplier", budget_mult);
  recover->add_option("--eps", eps_text, "accuracy for size estimation");
  recover->add_option("--junta-family", junta_family,
                      "disjoint variable groups, e.g. 1,2;4,5;7,8 "
                      "(truth tables seeded non-constant)");
  recover->add_option("--junta-hidden", junta_hidden,
                      "index of the hidden family member");
  recover->add_option("--format", rec_format)
      ->check(CLI::IsMember({"json", "csv"}));

  // oracle-demo
  auto* demo = app.add_subcommand("oracle-demo", "black-box separation demo");
  SpecFlags demo_flags;
  demo_flags.attach(demo);
  std::string mode = "classical";
  std::uint64_t demo_seed = 1;
  long runs = 20;
  long max_queries = 0;
  std::string demo_format = "json";
  demo->add_option("--mode", mode)
      ->check(CLI::IsMember({"quantum", "classical"}));
  demo->add_option("--format", demo_format)
      ->check(CLI::IsMember({"json", "csv"}));
  demo->add_option("--seed", demo_seed);
  demo->add_option("--runs", runs);
  demo->add_option("--max-queries", max_queries,
                   "budget for the classical probe (default 64 * 2^(n/2))");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "distances and copy counts");
  long survey_n = 0;
  long num_states = 0;
  std::string trace_text, fid_text, beps_text = "1/3";
  std::string bnd_format = "json";
  bnd->add_option("--survey-spheres", survey_n,
                  "pairwise sphere distance survey for this n");
  bnd->add_option("--num-states", num_states, "family size N for the copy bound");
  bnd->add_option("--trace", trace_text, "min pairwise trace distance");
  bnd->add_option("--fidelity", fid_text, "max pairwise fidelity");
  bnd->add_option("--eps", beps_text, "failure probability");
  std::uint64_t bnd_seed = 0;
  bnd->add_option("--format", bnd_format)
      ->check(CLI::IsMember({"json", "csv"}));
  bnd->add_option("--seed", bnd_seed, "accepted for uniformity; exact output");

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  long verify_max_n = 24;
  std::uint64_t verify_seed = 424242;
  std::string verify_format = "plain";
  verify->add_option("--max-n", verify_max_n);
  verify->add_option("--seed", verify_seed, "seed for the randomised spot checks");
  verify->add_option("--format", verify_format)
      ->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (kraw->parsed()) return run_kraw(kn, kr, kx, ktable, kformat);

  if (dist->parsed()) {
    const auto spec = dist_flags.build();
    if (dist_full) {
      emit_cube_distribution(pi_subset(spec), dist_format);
    } else if (std::holds_alternative<Sphere>(spec.kind())) {
      emit_weight_distribution(
          pi_sphere(spec.n(), std::get<Sphere>(spec.kind()).radius),
          dist_format, "sphere");
    } else if (std::holds_alternative<Ball>(spec.kind())) {
      emit_weight_distribution(
          pi_ball(spec.n(), std::get<Ball>(spec.kind()).radius), dist_format,
          "ball");
    } else {
      emit_weight_distribution(collapse_by_weight(pi_subset(spec)),
                               dist_format, "weights");
    }
    return 0;
  }

  if (sample->parsed()) {
    const bool histogram = sample_format == "hist";
    const auto spec = sample_flags.build();
    RngState rng(sample_seed, 0);
    std::vector<long> hist(sample_flags.n + 1, 0);
    if (weights_only) {
      WeightDistribution wd;
      if (std::holds_alternative<Sphere>(spec.kind()))
        wd = pi_sphere(spec.n(), std::get<Sphere>(spec.kind()).radius);
      else if (std::holds_alternative<Ball>(spec.kind()))
        wd = pi_ball(spec.n(), std::get<Ball>(spec.kind()).radius);
      else
        wd = collapse_by_weight(pi_subset(spec));
      WeightSampler sampler(wd);
      for (long i = 0; i < count; ++i) {
        const int w = sampler.sample(rng);
        if (histogram)
          ++hist[w];
        else
          std::cout << w << "\n";
      }
    } else {
      std::uint64_t shift = 0;
      if (random_shift)
        shift = rng.next_below(1ULL << spec.n());
      else if (!shift_bits.empty())
        shift = parse_bits(shift_bits, spec.n());
      FourierSampler sampler(make_shifted_state(spec, shift));
      for (long i = 0; i < count; ++i) {
        const auto z = sampler.sample(rng);
        if (histogram)
          ++hist[hamming_weight(z)];
        else
          std::cout << format_bits(z, spec.n()) << "\n";
      }
    }
    if (histogram) {
      ordered_json out;
      out["n"] = sample_flags.n;
      out["count"] = count;
      out["weights"] = hist;
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  }

  if (recover->parsed()) {
    if (problem == "junta")
      return run_recover_junta(rec_flags.n, junta_family, junta_hidden,
                               rec_seed, trials, budget_mult, rec_format);
    return run_recover(problem, rec_flags, true_r, rec_seed, trials,
                       budget_mult, parse_rational(eps_text), rec_format);
  }

  if (demo->parsed()) {
    const auto spec = demo_flags.build();
    OracleInstance oracle(spec, demo_seed);
    struct RunRow {
      std::uint64_t queries;
      std::uint64_t colour = 0;
      bool deficient = false;
      bool collision = false;
    };
    std::vector<RunRow> rows;
    std::vector<std::uint64_t> counts;
    if (mode == "quantum") {
      for (long run = 0; run < runs; ++run) {
        RngState rng(demo_seed + 1, run);
        oracle.reset_counters();
        const auto res = quantum_extract(oracle, rng);
        const auto queries =
            oracle.count_c() + oracle.count_s() + oracle.count_c_inv();
        counts.push_back(queries);
        rows.push_back({queries, res.colour, res.deficient, false});
      }
    } else {
      const std::uint64_t budget =
          max_queries > 0 ? static_cast<std::uint64_t>(max_queries)
                          : 64ULL << (demo_flags.n / 2);
      for (long run = 0; run < runs; ++run) {
        RngState rng(demo_seed + 1, run);
        const auto log = classical_collision_experiment(oracle, budget, rng);
        counts.push_back(log.queries_used);
        rows.push_back({log.queries_used, 0, false, log.collision_found});
      }
    }
    std::sort(counts.begin(), counts.end());
    const std::uint64_t median = counts[counts.size() / 2];
    if (demo_format == "csv") {
      if (mode == "quantum") {
        std::cout << "run,colour,deficient,queries\n";
        for (size_t i = 0; i < rows.size(); ++i)
          std::cout << i << "," << rows[i].colour << ","
                    << (rows[i].deficient ? "true" : "false") << ","
                    << rows[i].queries << "\n";
      } else {
        std::cout << "run,queries,collision\n";
        for (size_t i = 0; i < rows.size(); ++i)
          std::cout << i << "," << rows[i].queries << ","
                    << (rows[i].collision ? "true" : "false") << "\n";
      }
      return 0;
    }
    ordered_json out;
    out["n"] = demo_flags.n;
    out["mode"] = mode;
    out["colours"] = oracle.num_colours();
    out["runs"] = runs;
    out["median_queries"] = median;
    ordered_json per_run = ordered_json::array();
    for (const auto& row : rows) {
      if (mode == "quantum")
        per_run.push_back(ordered_json{{"colour", row.colour},
                                       {"deficient", row.deficient},
                                       {"queries", row.queries}});
      else
        per_run.push_back(ordered_json{{"queries", row.queries},
                                       {"collision", row.collision}});
    }
    out["per_run"] = per_run;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (bnd->parsed()) {
    if (survey_n > 0) {
      const auto survey = sphere_distance_survey(survey_n);
      if (bnd_format == "csv") {
        std::cout << "radius_a,radius_b,trace,fidelity,hy_bound\n";
        for (const auto& rep : survey)
          std::cout << rep.radius_a << "," << rep.radius_b << ","
                    << fmt_double(to_double(rep.trace)) << ","
                    << fmt_double(to_double(rep.fidelity)) << ","
                    << fmt_double(to_double(rep.hy_bound)) << "\n";
      } else {
        ordered_json out;
        out["n"] = survey_n;
        out["pairs"] = ordered_json::array();
        for (const auto& rep : survey)
          out["pairs"].push_back(
              ordered_json{{"radius_a", rep.radius_a},
                           {"radius_b", rep.radius_b},
                           {"trace", rational_json(rep.trace)},
                           {"fidelity", rational_json(rep.fidelity)},
                           {"hy_bound", rational_json(rep.hy_bound)}});
        std::cout << out.dump(2) << "\n";
      }
      return 0;
    }
    if (num_states > 0) {
      long copies = 0;
      if (!trace_text.empty())
        copies = copies_bound_from_trace(num_states, parse_rational(trace_text));
      else if (!fid_text.empty())
        copies = copies_bound(num_states, parse_rational(fid_text),
                              parse_rational(beps_text));
      else
        throw CLI::ValidationError("bounds", "need --trace or --fidelity");
      ordered_json out{{"num_states", num_states}, {"copies", copies}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    throw CLI::ValidationError("bounds",
                               "need --survey-spheres or --num-states");
  }

  if (verify->parsed())
    return run_verify(verify_max_n, verify_seed, verify_format);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::Error& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& ex) {
    std::cerr << "capacity error: " << ex.what() << "\n";
    return kExitCapacity;
  } catch (const InconclusiveError& ex) {
    std::cerr << "inconclusive: " << ex.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}
