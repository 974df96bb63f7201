// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits nonzero when any criterion fails. Run with the data directory as the
// only argument (defaults to "data").

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "sprintrt/clusrank.hpp"
#include "sprintrt/csv.hpp"
#include "sprintrt/datasets.hpp"
#include "sprintrt/remixfit.hpp"
#include "sprintrt/special.hpp"
#include "sprintrt/tailsim.hpp"
#include "support/oracles.hpp"

using namespace sprintrt;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MixedGGModel paper_model(double beta0, double gamma0, double nu, double tau_v, double tau_h) {
  MixedGGModel m;
  m.beta0 = beta0;
  m.gamma0 = gamma0;
  m.nu = nu;
  m.tau_v = tau_v;
  m.tau_h = tau_h;
  return m;
}

const MixedGGModel kMenIncl = paper_model(-1.910, -2.200, -1.178, 0.058, 0.320);
const MixedGGModel kMenExcl = paper_model(-1.910, -2.200, -1.177, 0.043, 0.326);
const MixedGGModel kWomen = paper_model(-1.921, -2.071, -3.691, 0.057, 0.111);

constexpr std::uint64_t kSeed = 20220717;

struct TailTarget {
  double threshold;
  double expected;
};

// Criterion-1 style check: |p_hat - expected| <= max(10% relative, 3 MC se).
bool check_tail_probs(const MixedGGModel& model, const std::vector<TailTarget>& targets,
                      std::size_t n_draws, std::string& detail) {
  std::vector<double> thresholds;
  for (const auto& t : targets) thresholds.push_back(t.threshold);
  const auto report = tail_probabilities(model, thresholds, n_draws, kSeed);
  bool ok = true;
  char buf[160];
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& est = report.thresholds_evaluated[i];
    const double se = std::sqrt(targets[i].expected * (1.0 - targets[i].expected) /
                                static_cast<double>(n_draws));
    const double tol = std::max(0.10 * targets[i].expected, 3.0 * se);
    const bool this_ok = std::fabs(est.p_hat - targets[i].expected) <= tol;
    ok = ok && this_ok;
    std::snprintf(buf, sizeof buf, "P(<%.2f)=%.3g (want %.3g±%.2g)%s ", est.threshold, est.p_hat,
                  targets[i].expected, tol, this_ok ? "" : "✗");
    detail += buf;
  }
  return ok;
}

// Criterion-2 style check: barrier within ±0.001 s plus 3x the Monte Carlo
// standard error of the empirical quantile (se_p / local density).
bool check_barriers(const MixedGGModel& model, const std::vector<TailTarget>& targets,
                    std::size_t n_draws, std::string& detail) {
  std::vector<double> probs;
  for (const auto& t : targets) probs.push_back(t.threshold);  // threshold = target prob here
  const auto barriers = invert_barriers(model, probs, n_draws, kSeed);

  bool ok = true;
  char buf[160];
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double p = targets[i].threshold;
    // Local density of the marginal at the barrier, from a finite difference
    // of the simulated CDF; used only to convert se(p) into seconds.
    const double barrier = barriers[i].barrier_seconds;
    const auto near = tail_probabilities(model, {barrier - 0.002, barrier + 0.002},
                                         std::max<std::size_t>(n_draws / 10, 100000), kSeed + 1);
    const double slope = (near.thresholds_evaluated[1].p_hat - near.thresholds_evaluated[0].p_hat) /
                         0.004;
    const double se_p = std::sqrt(p * (1.0 - p) / static_cast<double>(n_draws));
    const double mc_tol = slope > 0.0 ? 3.0 * se_p / slope : 0.0;
    const double tol = 0.001 + mc_tol;
    const bool this_ok = std::fabs(barrier - targets[i].expected) <= tol + 1e-12;
    ok = ok && this_ok;
    std::snprintf(buf, sizeof buf, "t(p=%.0e)=%.3f (want %.3f±%.4f)%s ", p, barrier,
                  targets[i].expected, tol, this_ok ? "" : "✗");
    detail += buf;
  }
  return ok;
}

// Conditional simulation at a dataset's venue/heat structure with fresh
// random effects; used by the parameter-recovery study.
ModelDataset simulate_at_structure(const ModelDataset& structure, const MixedGGModel& truth,
                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(static_cast<std::size_t>(structure.venue_count()));
  std::vector<double> h(static_cast<std::size_t>(structure.heat_count()));
  for (auto& vi : v) vi = truth.tau_v * rng.normal();
  for (auto& hj : h) hj = truth.tau_h * rng.normal();
  std::vector<ModelObs> observations;
  observations.reserve(structure.size());
  for (const auto& obs : structure.observations()) {
    const GGParams params{std::exp(truth.beta0 + v[static_cast<std::size_t>(obs.venue)]),
                          std::exp(truth.gamma0 + h[static_cast<std::size_t>(obs.heat)]),
                          truth.nu};
    observations.push_back({gengamma::sample(params, rng), obs.venue, obs.heat});
  }
  return ModelDataset::from_observations(std::move(observations),
                                         std::vector<int>(structure.venue_years()),
                                         std::vector<std::string>(structure.heat_ids()),
                                         std::vector<int>(structure.venue_of_heat()));
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

void criterion1(const std::string&) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  const bool probs_ok = check_tail_probs(
      kMenIncl, {{0.10, 2.76e-3}, {0.09, 4.95e-4}, {0.08, 6.84e-5}}, 10000000, detail);
  const double elapsed = seconds_since(start);
  const bool time_ok = elapsed < 60.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "runtime %.1fs%s", elapsed, time_ok ? "" : " (budget 60s)✗");
  report(1, "tail probabilities at published parameters", probs_ok && time_ok, detail + buf);
}

void criterion2(const std::string&) {
  std::string detail = "incl: ";
  const bool incl_ok = check_barriers(
      kMenIncl, {{1e-2, 0.108}, {1e-3, 0.094}, {1e-4, 0.082}}, 10000000, detail);
  detail += "| excl: ";
  const bool excl_ok = check_barriers(
      kMenExcl, {{1e-2, 0.111}, {1e-3, 0.096}, {1e-4, 0.083}}, 10000000, detail);
  report(2, "barrier inversion at published parameters", incl_ok && excl_ok, detail);
}

bool check_fit_row(const MixedGGModel& fitted, const MixedGGModel& expected, std::string& detail) {
  char buf[256];
  const bool beta_ok = std::fabs(fitted.beta0 - expected.beta0) <= 0.01;
  const bool gamma_ok = std::fabs(fitted.gamma0 - expected.gamma0) <= 0.01;
  const bool nu_ok = std::fabs(fitted.nu - expected.nu) <= 0.5;
  const bool tau_v_ok = std::fabs(fitted.tau_v - expected.tau_v) <= 0.5 * expected.tau_v;
  const bool tau_h_ok = std::fabs(fitted.tau_h - expected.tau_h) <= 0.5 * expected.tau_h;
  std::snprintf(buf, sizeof buf,
                "beta0=%.4f%s gamma0=%.4f%s nu=%.3f%s tau_v=%.4f%s tau_h=%.4f%s ", fitted.beta0,
                beta_ok ? "" : "✗", fitted.gamma0, gamma_ok ? "" : "✗", fitted.nu,
                nu_ok ? "" : "✗", fitted.tau_v, tau_v_ok ? "" : "✗", fitted.tau_h,
                tau_h_ok ? "" : "✗");
  detail += buf;
  return beta_ok && gamma_ok && nu_ok && tau_v_ok && tau_h_ok;
}

void criterion3(const std::string& data_dir) {
  const auto records = load_csv(data_dir + "/sprint_rt.csv");
  const auto incl_data = build_model_dataset(records, Gender::men, true, true);
  const auto excl_data = build_model_dataset(records, Gender::men, false, true);
  const auto incl = fit(incl_data);
  const auto excl = fit(excl_data);

  std::string detail;
  char buf[96];
  std::snprintf(buf, sizeof buf, "n=%zu ", incl_data.size());
  detail += buf;
  bool ok = check_fit_row(incl, kMenIncl, detail);
  const bool direction_ok = excl.tau_v < incl.tau_v;
  std::snprintf(buf, sizeof buf, "| excl2022 tau_v=%.4f < incl tau_v=%.4f%s", excl.tau_v,
                incl.tau_v, direction_ok ? "" : "✗");
  detail += buf;
  ok = ok && direction_ok && incl.converged && excl.converged;
  report(3, "fitted men's parameters vs published values", ok, detail);
}

void criterion4(const std::string& data_dir) {
  const auto records = load_csv(data_dir + "/sprint_rt.csv");
  struct Row {
    const char* comparison;
    Gender gender;
    std::size_t athletes;
    std::size_t rts;
    double asym_expected;
    bool floor_expected;
  };
  const Row rows[] = {
      {"2022nat-vs-2022world", Gender::men, 17, 80, 6.1e-5, true},
      {"2022nat-vs-2022world", Gender::women, 17, 80, 1.2e-3, true},
      {"2019-vs-2022", Gender::men, 34, 134, 1.1e-5, false},
      {"2019-vs-2022", Gender::women, 31, 124, 6.9e-3, false},
      {"2022-vs-2023", Gender::men, 45, 161, 1.4e-6, true},
      {"2022-vs-2023", Gender::women, 47, 182, 9.4e-7, true},
  };
  const CompetitionFilter treatment{{{CompetitionKind::world, 2022}}};
  const long B = 1000000;
  const double floor_value = 1.0 / (static_cast<double>(B) + 1.0);

  bool all_ok = true;
  std::string detail;
  for (const auto& row : rows) {
    CompetitionFilter control;
    if (std::string(row.comparison) == "2022nat-vs-2022world") {
      control = {{{CompetitionKind::national, 2022}}};
    } else if (std::string(row.comparison) == "2019-vs-2022") {
      control = {{{CompetitionKind::world, 2019}}};
    } else {
      control = {{{CompetitionKind::world, 2023}}};
    }
    const auto sample = build_clustered_sample(records, treatment, control, row.gender, false);
    const bool counts_ok =
        sample.cluster_count() == row.athletes && sample.total_observations() == row.rts;

    const auto perm = permutation_test(sample, B, kSeed);
    const auto asym = asymptotic_test(sample, B, kSeed);
    const bool perm_ok = perm.p_permutation <= 1.5e-3;
    const bool floor_ok = !row.floor_expected ||
                          std::fabs(perm.p_permutation - floor_value) < 1e-15;
    const bool asym_ok = asym.p_asymptotic >= row.asym_expected / 3.0 &&
                         asym.p_asymptotic <= row.asym_expected * 3.0;

    char buf[200];
    std::snprintf(buf, sizeof buf, "%s/%s: n=%zu/%zu%s p_perm=%.2e%s%s p_asym=%.2e(want %.1e/3x)%s | ",
                  row.comparison, row.gender == Gender::men ? "men" : "women",
                  sample.cluster_count(), sample.total_observations(), counts_ok ? "" : "✗",
                  perm.p_permutation, perm_ok ? "" : "✗",
                  row.floor_expected ? (floor_ok ? "=floor" : "≠floor✗") : "",
                  asym.p_asymptotic, row.asym_expected, asym_ok ? "" : "✗");
    detail += buf;
    all_ok = all_ok && counts_ok && perm_ok && floor_ok && asym_ok;
  }
  report(4, "clustered rank-sum comparisons", all_ok, detail);
}

void criterion5(const std::string&) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(99);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    // 2..5 clusters of size 1..3; retry until the sample is valid.
    ClusteredSample sample = [&] {
      for (;;) {
        std::vector<Cluster> clusters;
        const int n = 2 + static_cast<int>(rng.uniform_below(4));
        for (int i = 0; i < n; ++i) {
          Cluster cluster;
          cluster.athlete_id = "c" + std::to_string(i);
          const int m = 2 + static_cast<int>(rng.uniform_below(2));
          const int t = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m - 1)));
          for (int k = 0; k < m; ++k) {
            const double value = 0.1 + 0.005 * static_cast<double>(rng.uniform_below(20));
            cluster.observations.push_back({value, k < t});
          }
          clusters.push_back(std::move(cluster));
        }
        try {
          return ClusteredSample::from_clusters(std::move(clusters));
        } catch (const std::exception&) {
        }
      }
    }();
    worst = std::max(worst,
                     std::fabs(statistic_S(sample) - oracles::brute_force_statistic_S(sample)));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |S - enumeration| = %.2e over 200 samples, %.1fs", worst,
                seconds_since(start));
  report(5, "rank statistic equals brute-force enumeration", worst < 1e-12, buf);
}

void criterion6(const std::string&) {
  Rng meta(271828);
  std::vector<double> perm_ps, asym_ps;
  const int replicates = 1000;
  for (int r = 0; r < replicates; ++r) {
    std::vector<Cluster> clusters;
    const int n = 40;
    for (int i = 0; i < n; ++i) {
      Cluster cluster;
      cluster.athlete_id = "c" + std::to_string(i);
      const int m = 2 + static_cast<int>(meta.uniform_below(4));
      const int t = 1 + static_cast<int>(meta.uniform_below(static_cast<std::uint64_t>(m - 1)));
      for (int k = 0; k < m; ++k) cluster.observations.push_back({meta.normal() + 10.0, k < t});
      clusters.push_back(std::move(cluster));
    }
    const auto sample = ClusteredSample::from_clusters(std::move(clusters));
    perm_ps.push_back(permutation_test(sample, 999, 5000 + r).p_permutation);
    asym_ps.push_back(asymptotic_test(sample, 10000, 6000 + r).p_asymptotic);
  }
  const double ks_perm = oracles::ks_uniform(perm_ps);
  const double ks_asym = oracles::ks_uniform(asym_ps);
  char buf[96];
  std::snprintf(buf, sizeof buf, "KS(perm)=%.3f (<0.05), KS(asym)=%.3f (<0.08), n=40 clusters",
                ks_perm, ks_asym);
  report(6, "null p-values are uniform", ks_perm < 0.05 && ks_asym < 0.08, buf);
}

void criterion7(const std::string&) {
  bool ok = true;
  std::string detail;

  // Gamma special case, nu = 1.
  double worst_gamma = 0.0;
  for (const double mu : {0.1, 1.0, 5.0}) {
    for (const double sigma : {0.2, 0.7, 1.5}) {
      const GGParams params{mu, sigma, 1.0};
      const double shape = 1.0 / (sigma * sigma);
      const double scale = mu * sigma * sigma;
      for (const double frac : {0.3, 1.0, 2.5}) {
        const double y = frac * mu;
        const double reference = (shape - 1.0) * std::log(y) - y / scale - std::lgamma(shape) -
                                 shape * std::log(scale);
        worst_gamma = std::max(worst_gamma,
                               std::fabs(gengamma::log_density(params, y) - reference));
      }
    }
  }
  ok = ok && worst_gamma < 1e-10;
  detail += "gamma-case err=" + std::to_string(worst_gamma) + " ";

  // cdf/quantile round trip.
  const GGParams men{std::exp(-1.910), std::exp(-2.200), -1.178};
  double worst_rt = 0.0;
  for (const double p : {1e-6, 1e-3, 0.5, 1.0 - 1e-3}) {
    worst_rt = std::max(worst_rt, std::fabs(gengamma::cdf(men, gengamma::quantile(men, p)) - p));
  }
  ok = ok && worst_rt < 1e-9;
  char buf[96];
  std::snprintf(buf, sizeof buf, "roundtrip err=%.1e ", worst_rt);
  detail += buf;

  // Sampler KS at 1e6 draws.
  Rng rng(7);
  std::vector<double> draws(1000000);
  for (auto& d : draws) d = gengamma::sample(men, rng);
  const double ks = oracles::ks_statistic(draws, [&](double y) { return gengamma::cdf(men, y); });
  ok = ok && ks < 0.002;
  std::snprintf(buf, sizeof buf, "sampler KS=%.5f ", ks);
  detail += buf;

  // Density integrates to 1 at the published parameters.
  const GGParams table2{0.148, 0.11, -1.18};
  const double integral = oracles::integrate(
      [&](double y) { return gengamma::density(table2, y); }, gengamma::quantile(table2, 1e-12),
      gengamma::quantile(table2, 1.0 - 1e-12), 1e-9);
  ok = ok && std::fabs(integral - 1.0) < 1e-6;
  std::snprintf(buf, sizeof buf, "integral=%.8f", integral);
  detail += buf;

  report(7, "generalized Gamma kernel identities", ok, detail);
}

void criterion8(const std::string& data_dir) {
  const auto start = std::chrono::steady_clock::now();
  const auto records = load_csv(data_dir + "/sprint_rt.csv");
  const auto structure = build_model_dataset(records, Gender::men, true, true);

  // Parameter recovery: 50 replicates simulated at the real index structure.
  std::vector<double> beta_err, gamma_err, nu_err, tau_v_rel, tau_h_rel;
  for (std::uint64_t rep = 0; rep < 50; ++rep) {
    const auto data = simulate_at_structure(structure, kMenIncl, 1000 + rep);
    const auto model = fit(data);
    beta_err.push_back(model.beta0 - kMenIncl.beta0);
    gamma_err.push_back(model.gamma0 - kMenIncl.gamma0);
    nu_err.push_back(model.nu - kMenIncl.nu);
    tau_v_rel.push_back((model.tau_v - kMenIncl.tau_v) / kMenIncl.tau_v);
    tau_h_rel.push_back((model.tau_h - kMenIncl.tau_h) / kMenIncl.tau_h);
  }
  const double med_beta = std::fabs(median_of(beta_err));
  const double med_gamma = std::fabs(median_of(gamma_err));
  const double med_nu = std::fabs(median_of(nu_err));
  const double med_tau_v = std::fabs(median_of(tau_v_rel));
  const double med_tau_h = std::fabs(median_of(tau_h_rel));
  const bool recovery_ok = med_beta <= 0.01 && med_gamma <= 0.01 && med_nu <= 0.5 &&
                           med_tau_v <= 0.5 && med_tau_h <= 0.5;

  // Residual normality on data simulated from a fitted model.
  const auto fitted = fit(structure);
  int rejections = 0;
  const int reps = 100;
  for (std::uint64_t rep = 0; rep < static_cast<std::uint64_t>(reps); ++rep) {
    const auto data = simulate_at_structure(structure, fitted, 40000 + rep);
    const auto residuals = quantile_residuals(fitted, data);
    const double ks = oracles::ks_statistic(residuals.z_scores,
                                            [](double z) { return special::norm_cdf(z); });
    // 1% KS critical value, fully specified null.
    if (ks > 1.628 / std::sqrt(static_cast<double>(residuals.z_scores.size()))) ++rejections;
  }
  const bool residual_ok = rejections <= reps / 10;

  const double elapsed = seconds_since(start);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "recovery medians |b|=%.4f |g|=%.4f |nu|=%.3f |tv|=%.1f%% |th|=%.1f%%%s; "
                "AD/KS rejections %d/100%s; runtime %.0fs%s",
                med_beta, med_gamma, med_nu, 100.0 * med_tau_v, 100.0 * med_tau_h,
                recovery_ok ? "" : "✗", rejections, residual_ok ? "" : "✗", elapsed,
                elapsed < 600.0 ? "" : " (budget 600s)✗");
  report(8, "fit self-consistency", recovery_ok && residual_ok && elapsed < 600.0, buf);
}

void criterion9(const std::string& data_dir) {
  const auto raw_records = load_csv(data_dir + "/sprint_rt.csv");
  const auto exclusions = load_exclusions(data_dir + "/exclusions.csv");
  const auto records = apply_exclusions(raw_records, exclusions);

  bool ok = true;
  std::string detail;

  // Women's fit vs the published row (outlier excluded via the bundled list).
  {
    const auto data = build_model_dataset(records, Gender::women, true, true);
    char buf[48];
    std::snprintf(buf, sizeof buf, "women n=%zu%s ", data.size(), data.size() == 732 ? "" : "✗");
    detail += buf;
    ok = ok && data.size() == 732;
    const auto model = fit(data);
    detail += "fit: ";
    ok = check_fit_row(model, kWomen, detail) && ok;
  }

  // Women's tail table at the published women's parameters.
  {
    std::string tail_detail = "| S3: ";
    const bool probs_ok = check_tail_probs(
        kWomen, {{0.10, 5.46e-4}, {0.09, 1.12e-5}, {0.08, 1e-7}}, 10000000, tail_detail);
    std::string barrier_detail = "| S4: ";
    const bool barriers_ok = check_barriers(
        kWomen, {{1e-2, 0.111}, {1e-3, 0.102}, {1e-4, 0.095}}, 10000000, barrier_detail);
    ok = ok && probs_ok && barriers_ok;
    detail += tail_detail + barrier_detail;
  }

  // Men's fit with disqualified times removed, then its tail probabilities.
  {
    const auto data = build_model_dataset(records, Gender::men, true, false);
    char buf[48];
    std::snprintf(buf, sizeof buf, "| nodq n=%zu%s ", data.size(), data.size() == 759 ? "" : "✗");
    detail += buf;
    ok = ok && data.size() == 759;
    const auto model = fit(data);
    std::string tail_detail = "S5: ";
    const bool s5_ok = check_tail_probs(
        model, {{0.10, 1.97e-3}, {0.09, 3.53e-4}, {0.08, 4.93e-5}}, 10000000, tail_detail);
    ok = ok && s5_ok && model.converged;
    detail += tail_detail;
  }

  // Pooled-gender comparison counts.
  {
    struct PooledRow {
      const char* name;
      CompetitionFilter control;
      std::size_t athletes;
      std::size_t rts;
    };
    const PooledRow rows[] = {
        {"2022nat-vs-2022world", {{{CompetitionKind::national, 2022}}}, 35, 160},
        {"2019-vs-2022", {{{CompetitionKind::world, 2019}}}, 65, 258},
        {"2022-vs-2023", {{{CompetitionKind::world, 2023}}}, 92, 343},
    };
    const CompetitionFilter treatment{{{CompetitionKind::world, 2022}}};
    detail += "| pooled: ";
    for (const auto& row : rows) {
      const auto sample =
          build_clustered_sample(raw_records, treatment, row.control, std::nullopt, true);
      const bool counts_ok =
          sample.cluster_count() == row.athletes && sample.total_observations() == row.rts;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s %zu/%zu (want %zu/%zu)%s ", row.name,
                    sample.cluster_count(), sample.total_observations(), row.athletes, row.rts,
                    counts_ok ? "" : "✗");
      detail += buf;
      ok = ok && counts_ok;
    }
  }

  report(9, "supplement reproductions", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : "data";
  std::printf("acceptance suite, data dir: %s\n", data_dir.c_str());

  criterion1(data_dir);
  criterion2(data_dir);
  try {
    criterion3(data_dir);
  } catch (const std::exception& e) {
    report(3, "fitted men's parameters vs published values", false, e.what());
  }
  try {
    criterion4(data_dir);
  } catch (const std::exception& e) {
    report(4, "clustered rank-sum comparisons", false, e.what());
  }
  criterion5(data_dir);
  criterion6(data_dir);
  criterion7(data_dir);
  try {
    criterion8(data_dir);
  } catch (const std::exception& e) {
    report(8, "fit self-consistency", false, e.what());
  }
  try {
    criterion9(data_dir);
  } catch (const std::exception& e) {
    report(9, "supplement reproductions", false, e.what());
  }

  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
