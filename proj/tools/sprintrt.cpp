// Command-line front end: reproducible clustered rank-sum comparisons,
// mixed generalized-Gamma fits, tail-probability tables, and a one-shot
// `reproduce` pipeline that regenerates every report from the bundled data.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sprintrt/clusrank.hpp"
#include "sprintrt/csv.hpp"
#include "sprintrt/datasets.hpp"
#include "sprintrt/report_json.hpp"
#include "sprintrt/tailsim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sprintrt;

namespace {

constexpr std::uint64_t kDefaultSeed = 20220717;  // date of the 2022 110H final
constexpr const char* kVersion = "0.1.0";

std::string default_data_dir() {
  if (const char* env = std::getenv("SPRINTRT_DATA_DIR")) return env;
  return "data";
}

std::string default_data_path() { return default_data_dir() + "/sprint_rt.csv"; }

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

struct ComparisonSpec {
  std::string name;
  CompetitionFilter treatment;
  CompetitionFilter control;
};

const std::vector<ComparisonSpec>& comparisons() {
  static const std::vector<ComparisonSpec> specs = {
      {"2022nat-vs-2022world",
       {{{CompetitionKind::world, 2022}}},
       {{{CompetitionKind::national, 2022}}}},
      {"2019-vs-2022", {{{CompetitionKind::world, 2022}}}, {{{CompetitionKind::world, 2019}}}},
      {"2022-vs-2023", {{{CompetitionKind::world, 2022}}}, {{{CompetitionKind::world, 2023}}}},
  };
  return specs;
}

const ComparisonSpec* find_comparison(const std::string& name) {
  for (const auto& spec : comparisons()) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

struct ClusrankJob {
  std::string comparison;
  std::string gender;  // men, women, pooled
};

struct ClusrankRow {
  ClusrankJob job;
  TestReport report;
};

TestReport run_one_clusrank(const std::vector<RTRecord>& records, const ClusrankJob& job,
                            long permutations, long moment_permutations, std::uint64_t seed,
                            const std::string& data_path, std::uint64_t checksum) {
  const ComparisonSpec* spec = find_comparison(job.comparison);
  if (!spec) throw std::runtime_error("unknown comparison '" + job.comparison + "'");

  std::optional<Gender> gender;
  const bool pooled = job.gender == "pooled";
  if (!pooled) gender = parse_gender(job.gender);

  const auto sample =
      build_clustered_sample(records, spec->treatment, spec->control, gender, pooled);

  TestReport report;
  report.comparison = job.comparison;
  report.gender = job.gender;
  report.n_athletes = sample.cluster_count();
  report.n_rts = sample.total_observations();
  report.moment_permutations = moment_permutations;
  report.asymptotic_only = permutations == 0;

  const auto asym = asymptotic_test(sample, moment_permutations, seed);
  if (permutations > 0) {
    report.result = permutation_test(sample, permutations, seed);
    // The standardized statistic and its p-value come from the dedicated
    // moment estimate, which may use a different permutation budget.
    report.result.E0 = asym.E0;
    report.result.sd0 = asym.sd0;
    report.result.z = asym.z;
    report.result.p_asymptotic = asym.p_asymptotic;
  } else {
    report.result = asym;
  }

  report.run.command = "clusrank";
  report.run.seed = seed;
  report.run.data_path = data_path;
  report.run.dataset_checksum = checksum;
  report.run.config = {{"compare", job.comparison},
                       {"gender", job.gender},
                       {"permutations", std::to_string(permutations)},
                       {"moment_permutations", std::to_string(moment_permutations)}};
  return report;
}

std::string table1_csv(const std::vector<ClusrankRow>& rows) {
  std::ostringstream out;
  out << "comparison,gender,p_permutation,p_asymptotic,n_athletes,n_rts\n";
  out.precision(17);
  for (const auto& row : rows) {
    out << row.job.comparison << "," << row.job.gender << ",";
    if (std::isnan(row.report.result.p_permutation)) {
      out << "";
    } else {
      out << row.report.result.p_permutation;
    }
    out << "," << row.report.result.p_asymptotic << "," << row.report.n_athletes << ","
        << row.report.n_rts << "\n";
  }
  return out.str();
}

struct FitJob {
  std::string gender = "men";
  bool include_2022 = true;
  bool include_dq = true;
};

std::string fit_tag(const FitJob& job) {
  std::string tag = job.gender;
  tag += job.include_2022 ? "_incl2022" : "_excl2022";
  if (!job.include_dq) tag += "_nodq";
  return tag;
}

std::string residuals_csv(const ResidualSet& residuals) {
  std::ostringstream out;
  out.precision(17);
  out << "observation,z_score\n";
  for (std::size_t i = 0; i < residuals.z_scores.size(); ++i) {
    out << i << "," << residuals.z_scores[i] << "\n";
  }
  return out.str();
}

std::string qq_csv(const ResidualSet& residuals) {
  std::ostringstream out;
  out.precision(17);
  out << "theoretical_quantile,sorted_z_score\n";
  for (const auto& pair : residuals.qq_pairs) {
    out << pair.theoretical << "," << pair.observed << "\n";
  }
  return out.str();
}

// Plot-ready density data: histogram of the observed values plus a Gaussian
// kernel density of simulated draws (binned approximation, Silverman
// bandwidth), mirroring the published density-overlay diagnostic.
std::string density_overlay_csv(const std::vector<double>& observed,
                                const std::vector<double>& simulated) {
  std::ostringstream out;
  out.precision(12);

  const auto [obs_min_it, obs_max_it] = std::minmax_element(observed.begin(), observed.end());
  const double lo = *obs_min_it;
  const double hi = *obs_max_it;
  const int bins = 40;
  const double width = (hi - lo) / bins;
  std::vector<int> counts(bins, 0);
  for (const double y : observed) {
    int b = static_cast<int>((y - lo) / width);
    if (b == bins) b = bins - 1;
    ++counts[static_cast<std::size_t>(b)];
  }
  out << "series,x,value\n";
  const double n_obs = static_cast<double>(observed.size());
  for (int b = 0; b < bins; ++b) {
    const double center = lo + (b + 0.5) * width;
    out << "histogram," << center << "," << counts[static_cast<std::size_t>(b)] / (n_obs * width)
        << "\n";
  }

  // Silverman bandwidth on the simulated sample.
  double mean = 0.0;
  for (const double y : simulated) mean += y;
  mean /= static_cast<double>(simulated.size());
  double ss = 0.0;
  for (const double y : simulated) ss += (y - mean) * (y - mean);
  const double sd = std::sqrt(ss / static_cast<double>(simulated.size() - 1));
  const double bandwidth =
      1.06 * sd * std::pow(static_cast<double>(simulated.size()), -0.2);

  // Bin the draws finely, then evaluate the kernel sum over bins.
  const double grid_lo = lo - 3.0 * bandwidth;
  const double grid_hi = hi + 3.0 * bandwidth;
  const int fine = 2048;
  const double fine_width = (grid_hi - grid_lo) / fine;
  std::vector<double> fine_counts(fine, 0.0);
  for (const double y : simulated) {
    if (y < grid_lo || y >= grid_hi) continue;
    fine_counts[static_cast<std::size_t>((y - grid_lo) / fine_width)] += 1.0;
  }
  const int grid_points = 256;
  for (int g = 0; g < grid_points; ++g) {
    const double x = grid_lo + (grid_hi - grid_lo) * g / (grid_points - 1);
    double density = 0.0;
    for (int b = 0; b < fine; ++b) {
      if (fine_counts[static_cast<std::size_t>(b)] == 0.0) continue;
      const double center = grid_lo + (b + 0.5) * fine_width;
      const double u = (x - center) / bandwidth;
      if (std::fabs(u) > 8.0) continue;
      density += fine_counts[static_cast<std::size_t>(b)] * std::exp(-0.5 * u * u);
    }
    density /= static_cast<double>(simulated.size()) * bandwidth * std::sqrt(2.0 * M_PI);
    out << "kde," << x << "," << density << "\n";
  }
  return out.str();
}

int cmd_clusrank(const std::string& data_path, const std::vector<std::string>& compare,
                 const std::string& gender, bool pool_genders, long permutations,
                 long moment_permutations, std::uint64_t seed, const std::string& out_dir) {
  const auto records = load_csv(data_path);
  const std::uint64_t checksum = file_fnv1a64(data_path);
  fs::create_directories(out_dir);

  std::vector<ClusrankJob> jobs;
  const std::vector<std::string> requested =
      compare.empty() ? std::vector<std::string>{"2022nat-vs-2022world", "2019-vs-2022",
                                                 "2022-vs-2023"}
                      : compare;
  for (const auto& name : requested) {
    if (!find_comparison(name)) {
      std::cerr << "error: unknown comparison '" << name << "'\n";
      return 2;
    }
    if (pool_genders) {
      jobs.push_back({name, "pooled"});
    } else if (!gender.empty()) {
      jobs.push_back({name, gender});
    } else {
      jobs.push_back({name, "men"});
      jobs.push_back({name, "women"});
    }
  }

  std::vector<ClusrankRow> rows;
  for (const auto& job : jobs) {
    const auto report = run_one_clusrank(records, job, permutations, moment_permutations, seed,
                                         data_path, checksum);
    const std::string path =
        out_dir + "/clusrank_" + job.comparison + "_" + job.gender + ".json";
    write_text_file(path, test_report_to_json(report));
    std::cout << job.comparison << " " << job.gender << ": n_athletes=" << report.n_athletes
              << " n_rts=" << report.n_rts << " z=" << report.result.z
              << " p_perm=" << report.result.p_permutation
              << " p_asym=" << report.result.p_asymptotic << "\n";
    rows.push_back({job, report});
  }
  write_text_file(out_dir + "/table1.csv", table1_csv(rows));
  return 0;
}

int cmd_fit(const std::string& data_path, const FitJob& job, const std::string& exclusions_path,
            double tol, int max_iter, std::uint64_t seed, const std::string& out_dir,
            std::string* model_path_out = nullptr) {
  auto records = load_csv(data_path);
  if (!exclusions_path.empty()) {
    records = apply_exclusions(std::move(records), load_exclusions(exclusions_path));
  }
  const auto data =
      build_model_dataset(records, parse_gender(job.gender), job.include_2022, job.include_dq);

  FitConfig config;
  config.tol = tol;
  config.max_iter = max_iter;
  const auto model = fit(data, config);

  RunInfo run;
  run.command = "fit";
  run.seed = seed;
  run.data_path = data_path;
  run.dataset_checksum = file_fnv1a64(data_path);
  run.config = {{"gender", job.gender},
                {"include_2022", job.include_2022 ? "true" : "false"},
                {"include_dq", job.include_dq ? "true" : "false"},
                {"exclusions", exclusions_path},
                {"tol", format_double(tol)},
                {"max_iter", std::to_string(max_iter)}};

  fs::create_directories(out_dir);
  const std::string tag = fit_tag(job);
  const std::string model_path = out_dir + "/model_" + tag + ".json";
  save_model_json(model, run, model_path);
  if (model_path_out) *model_path_out = model_path;

  const auto residuals = quantile_residuals(model, data);
  write_text_file(out_dir + "/residuals_" + tag + ".csv", residuals_csv(residuals));
  write_text_file(out_dir + "/qq_" + tag + ".csv", qq_csv(residuals));

  std::vector<double> observed;
  observed.reserve(data.size());
  for (const auto& obs : data.observations()) observed.push_back(obs.value);
  const auto simulated = simulate_marginal(model, 1000000, seed);
  write_text_file(out_dir + "/density_overlay_" + tag + ".csv",
                  density_overlay_csv(observed, simulated));

  std::cout << "fit " << tag << ": n=" << data.size() << " beta0=" << model.beta0
            << " gamma0=" << model.gamma0 << " nu=" << model.nu << " tau_v=" << model.tau_v
            << " tau_h=" << model.tau_h << " converged=" << (model.converged ? "yes" : "no")
            << " iterations=" << model.n_iterations
            << " filliben=" << filliben_correlation(residuals) << "\n";

  return model.converged ? 0 : 3;
}

int cmd_tail(const std::string& model_path, std::vector<double> thresholds,
             std::vector<double> targets, std::size_t draws, std::uint64_t seed,
             const std::string& out_dir) {
  const auto model = load_model_json(model_path);
  if (thresholds.empty()) thresholds = {0.08, 0.09, 0.10};
  if (targets.empty()) targets = {1e-2, 1e-3, 1e-4};

  auto report = tail_probabilities(model, thresholds, draws, seed);
  report.barriers = invert_barriers(model, targets, draws, seed);
  report.model_provenance = model_path;

  RunInfo run;
  run.command = "tail";
  run.seed = seed;
  run.data_path = model_path;
  run.dataset_checksum = file_fnv1a64(model_path);
  std::string thresholds_str, targets_str;
  for (const double t : thresholds) thresholds_str += format_double(t) + " ";
  for (const double t : targets) targets_str += format_double(t) + " ";
  run.config = {{"model", model_path},
                {"thresholds", thresholds_str},
                {"targets", targets_str},
                {"draws", std::to_string(draws)}};

  fs::create_directories(out_dir);
  const std::string stem = fs::path(model_path).stem().string();
  const std::string tag = stem.rfind("model_", 0) == 0 ? stem.substr(6) : stem;
  write_text_file(out_dir + "/tail_" + tag + ".json", tail_report_to_json(report, run));
  write_text_file(out_dir + "/tail_" + tag + ".csv", tail_report_to_csv(report));

  for (const auto& est : report.thresholds_evaluated) {
    std::cout << "P(Y < " << est.threshold << ") = " << est.p_hat << " (se " << est.mc_se
              << ", one in " << est.one_in_n << " starts)"
              << (est.zero_count ? " [upper bound, zero draws below]" : "") << "\n";
  }
  for (const auto& barrier : report.barriers) {
    std::cout << "barrier(p=" << barrier.target_tail_prob << ") = " << barrier.barrier_seconds
              << " s\n";
  }
  return 0;
}

int cmd_reproduce(const std::string& data_path, const std::string& exclusions_path,
                  std::string out_dir, std::uint64_t seed, bool quick) {
  if (out_dir.empty()) {
    const auto now = std::chrono::system_clock::now();
    const auto stamp = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch());
    out_dir = "reproduce_" + std::to_string(stamp.count());
  }
  fs::create_directories(out_dir);

  const long permutations = quick ? 10000 : 1000000;
  const long pooled_permutations = quick ? 10000 : 100000;
  const long moment_permutations = quick ? 10000 : 1000000;
  const std::size_t draws = quick ? 100000 : 10000000;

  json manifest;
  manifest["version"] = kVersion;
  manifest["seed"] = seed;
  manifest["quick"] = quick;
  manifest["data_path"] = data_path;
  manifest["dataset_checksum_fnv1a64"] = file_fnv1a64(data_path);
  manifest["steps"] = json::array();
  bool all_ok = true;

  const auto record_step = [&](const std::string& name, int status,
                               const std::vector<std::string>& outputs) {
    manifest["steps"].push_back(
        json{{"name", name}, {"exit_status", status}, {"outputs", outputs}});
    if (status != 0) all_ok = false;
  };

  const auto records = load_csv(data_path);
  const std::uint64_t checksum = file_fnv1a64(data_path);

  // Rank-sum comparisons: six per-gender plus the three pooled variants.
  std::vector<ClusrankRow> table_rows;
  std::vector<ClusrankRow> pooled_rows;
  for (const auto& spec : comparisons()) {
    for (const std::string gender : {"men", "women"}) {
      const ClusrankJob job{spec.name, gender};
      try {
        auto report = run_one_clusrank(records, job, permutations, moment_permutations, seed,
                                       data_path, checksum);
        const std::string path =
            out_dir + "/clusrank_" + spec.name + "_" + gender + ".json";
        write_text_file(path, test_report_to_json(report));
        table_rows.push_back({job, std::move(report)});
        record_step("clusrank " + spec.name + " " + gender, 0, {path});
      } catch (const std::exception& e) {
        record_step("clusrank " + spec.name + " " + gender + " FAILED: " + e.what(), 1, {});
      }
    }
  }
  for (const auto& spec : comparisons()) {
    const ClusrankJob job{spec.name, "pooled"};
    try {
      auto report = run_one_clusrank(records, job, pooled_permutations, moment_permutations, seed,
                                     data_path, checksum);
      const std::string path = out_dir + "/clusrank_" + spec.name + "_pooled.json";
      write_text_file(path, test_report_to_json(report));
      pooled_rows.push_back({job, std::move(report)});
      record_step("clusrank " + spec.name + " pooled", 0, {path});
    } catch (const std::exception& e) {
      record_step("clusrank " + spec.name + " pooled FAILED: " + e.what(), 1, {});
    }
  }
  write_text_file(out_dir + "/table1.csv", table1_csv(table_rows));
  write_text_file(out_dir + "/table_s1.csv", table1_csv(pooled_rows));

  // Model fits: men with/without 2022, men without disqualified times,
  // women with/without 2022 (bundled exclusion list applied).
  struct FitPlan {
    FitJob job;
    std::string exclusions;
  };
  const std::vector<FitPlan> fit_plans = {
      {{"men", true, true}, exclusions_path},
      {{"men", false, true}, exclusions_path},
      {{"men", true, false}, exclusions_path},
      {{"women", true, true}, exclusions_path},
      {{"women", false, true}, exclusions_path},
  };
  std::vector<std::string> model_paths;
  for (const auto& plan : fit_plans) {
    std::string model_path;
    int status = 1;
    try {
      status = cmd_fit(data_path, plan.job, plan.exclusions, 1e-6, 200, seed, out_dir,
                       &model_path);
    } catch (const std::exception& e) {
      record_step("fit " + fit_tag(plan.job) + " FAILED: " + e.what(), 1, {});
      continue;
    }
    record_step("fit " + fit_tag(plan.job), status, {model_path});
    if (status == 0) model_paths.push_back(model_path);
  }

  // Tail tables for every fitted model.
  for (const auto& model_path : model_paths) {
    int status = 1;
    try {
      status = cmd_tail(model_path, {}, {}, draws, seed, out_dir);
    } catch (const std::exception& e) {
      record_step("tail " + model_path + " FAILED: " + e.what(), 1, {});
      continue;
    }
    record_step("tail " + model_path, status, {});
  }

  manifest["counts"] = json{{"clusrank_reports", table_rows.size()},
                            {"clusrank_pooled_reports", pooled_rows.size()},
                            {"model_fits", model_paths.size()},
                            {"tail_reports", model_paths.size()}};
  manifest["all_ok"] = all_ok;
  write_text_file(out_dir + "/manifest.json", manifest.dump(2) + "\n");
  std::cout << "reproduce: wrote " << out_dir << "/manifest.json"
            << (all_ok ? "" : " (with failures)") << "\n";
  return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sprint-start reaction time analyses: clustered rank tests, "
               "generalized Gamma mixed models, and tail simulation"};
  app.require_subcommand(1);

  std::string data_path = default_data_path();
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir = ".";

  // clusrank
  auto* clusrank_cmd = app.add_subcommand("clusrank", "Clustered rank-sum comparisons");
  std::vector<std::string> compare;
  std::string gender;
  bool pool_genders = false;
  long permutations = 1000000;
  long moment_permutations = 1000000;
  clusrank_cmd->add_option("--data", data_path, "Reaction-time CSV");
  clusrank_cmd->add_option("--seed", seed, "RNG seed");
  clusrank_cmd->add_option("--out", out_dir, "Output directory");
  clusrank_cmd->add_option("--compare", compare,
                           "Comparison name(s): 2022nat-vs-2022world, 2019-vs-2022, 2022-vs-2023 "
                           "(default: all)");
  clusrank_cmd->add_option("--gender", gender, "men or women (default: both)")
      ->check(CLI::IsMember({"men", "women"}));
  clusrank_cmd->add_flag("--pool-genders", pool_genders, "Pool men's and women's data");
  clusrank_cmd->add_option("--permutations", permutations,
                           "Permutation count (0 = asymptotic only)");
  clusrank_cmd->add_option("--moment-permutations", moment_permutations,
                           "Permutations used to estimate the null moments");

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Fit the random-effects generalized Gamma model");
  FitJob fit_job;
  std::string exclusions_path;
  bool no_default_exclusions = false;
  double tol = 1e-6;
  int max_iter = 200;
  fit_cmd->add_option("--data", data_path, "Reaction-time CSV");
  fit_cmd->add_option("--seed", seed, "RNG seed (density overlay simulation)");
  fit_cmd->add_option("--out", out_dir, "Output directory");
  fit_cmd->add_option("--gender", fit_job.gender, "men or women")
      ->check(CLI::IsMember({"men", "women"}));
  fit_cmd->add_flag("--include-2022,!--no-include-2022", fit_job.include_2022,
                    "Include the 2022 season (default: included)");
  fit_cmd->add_flag("--include-dq,!--no-include-dq", fit_job.include_dq,
                    "Include positive disqualified times (default: included)");
  fit_cmd->add_option("--exclusions", exclusions_path,
                      "Per-record exclusion CSV (default: alongside the data file)");
  fit_cmd->add_flag("--no-exclusions", no_default_exclusions, "Do not apply any exclusion list");
  fit_cmd->add_option("--tol", tol, "Convergence tolerance on the penalized log-likelihood");
  fit_cmd->add_option("--max-iter", max_iter, "Maximum outer iterations");

  // tail
  auto* tail_cmd = app.add_subcommand("tail", "Tail probabilities and barrier inversion");
  std::string model_path;
  std::vector<double> thresholds;
  std::vector<double> targets;
  std::size_t draws = 10000000;
  tail_cmd->add_option("--model", model_path, "Fitted model JSON")->required();
  tail_cmd->add_option("--seed", seed, "RNG seed");
  tail_cmd->add_option("--out", out_dir, "Output directory");
  tail_cmd->add_option("--thresholds", thresholds, "Thresholds in seconds (default 0.08 0.09 0.10)");
  tail_cmd->add_option("--targets", targets, "Tail-probability targets (default 1e-2 1e-3 1e-4)");
  tail_cmd->add_option("--draws", draws, "Monte Carlo draw count");

  // reproduce
  auto* repro_cmd = app.add_subcommand("reproduce", "Run the full analysis pipeline");
  std::string repro_out;
  bool quick = false;
  repro_cmd->add_option("--data", data_path, "Reaction-time CSV");
  repro_cmd->add_option("--seed", seed, "RNG seed");
  repro_cmd->add_option("--out", repro_out, "Output directory (default: timestamped)");
  repro_cmd->add_option("--exclusions", exclusions_path,
                        "Per-record exclusion CSV (default: alongside the data file)");
  repro_cmd->add_flag("--quick", quick, "Small permutation/draw budgets (smoke run)");

  CLI11_PARSE(app, argc, argv);

  // Default exclusion list: exclusions.csv next to the data file, if present.
  if (exclusions_path.empty() && !no_default_exclusions) {
    const fs::path candidate = fs::path(data_path).parent_path() / "exclusions.csv";
    if (fs::exists(candidate)) exclusions_path = candidate.string();
  }
  if (no_default_exclusions) exclusions_path.clear();

  try {
    if (clusrank_cmd->parsed()) {
      return cmd_clusrank(data_path, compare, gender, pool_genders, permutations,
                          moment_permutations, seed, out_dir);
    }
    if (fit_cmd->parsed()) {
      return cmd_fit(data_path, fit_job, exclusions_path, tol, max_iter, seed, out_dir);
    }
    if (tail_cmd->parsed()) {
      return cmd_tail(model_path, thresholds, targets, draws, seed, out_dir);
    }
    if (repro_cmd->parsed()) {
      return cmd_reproduce(data_path, exclusions_path, repro_out, seed, quick);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
