#include "sprintrt/report_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sprintrt {

namespace {

using nlohmann::json;

json run_info_json(const RunInfo& run) {
  json cfg = json::object();
  for (const auto& [key, value] : run.config) cfg[key] = value;
  return json{{"command", run.command},
              {"config", cfg},
              {"seed", run.seed},
              {"data_path", run.data_path},
              {"dataset_checksum_fnv1a64", run.dataset_checksum}};
}

json result_json(const ClusRankResult& r) {
  json out{{"S", r.S},          {"E0", r.E0},
           {"sd0", r.sd0},      {"z", r.z},
           {"p_asymptotic", r.p_asymptotic},
           {"n_permutations", r.n_permutations},
           {"seed", r.seed},    {"degenerate", r.degenerate}};
  if (std::isnan(r.p_permutation)) {
    out["p_permutation"] = nullptr;
  } else {
    out["p_permutation"] = r.p_permutation;
  }
  return out;
}

}  // namespace

std::string test_report_to_json(const TestReport& report) {
  json out{{"run", run_info_json(report.run)},
           {"comparison", report.comparison},
           {"gender", report.gender},
           {"n_athletes", report.n_athletes},
           {"n_rts", report.n_rts},
           {"asymptotic_only", report.asymptotic_only},
           {"moment_permutations", report.moment_permutations},
           {"result", result_json(report.result)}};
  return out.dump(2) + "\n";
}

std::string tail_report_to_json(const TailReport& report, const RunInfo& run) {
  json thresholds = json::array();
  for (const auto& est : report.thresholds_evaluated) {
    thresholds.push_back(json{{"threshold_seconds", est.threshold},
                              {"p_hat", est.p_hat},
                              {"mc_standard_error", est.mc_se},
                              {"one_in_n_starts", est.one_in_n},
                              {"zero_count_upper_bound", est.zero_count}});
  }
  json barriers = json::array();
  for (const auto& b : report.barriers) {
    barriers.push_back(json{{"target_tail_prob", b.target_tail_prob},
                            {"barrier_seconds", b.barrier_seconds}});
  }
  json out{{"run", run_info_json(run)},
           {"thresholds_evaluated", thresholds},
           {"barriers", barriers},
           {"n_draws", report.n_draws},
           {"seed", report.seed},
           {"model_provenance", report.model_provenance}};
  return out.dump(2) + "\n";
}

std::string tail_report_to_csv(const TailReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "threshold_seconds,p_hat,mc_standard_error\n";
  for (const auto& est : report.thresholds_evaluated) {
    out << est.threshold << "," << est.p_hat << "," << est.mc_se << "\n";
  }
  return out.str();
}

std::string model_to_json(const MixedGGModel& model, const RunInfo& run) {
  json out{{"run", run_info_json(run)},
           {"beta0", model.beta0},
           {"gamma0", model.gamma0},
           {"nu", model.nu},
           {"tau_v", model.tau_v},
           {"tau_h", model.tau_h},
           {"se_beta0", model.se_beta0},
           {"se_gamma0", model.se_gamma0},
           {"se_nu", model.se_nu},
           {"loglik_penalized", model.loglik_penalized},
           {"converged", model.converged},
           {"n_iterations", model.n_iterations},
           {"tau_v_boundary", model.tau_v_boundary},
           {"tau_h_boundary", model.tau_h_boundary},
           {"venue_years", model.venue_years},
           {"heat_ids", model.heat_ids},
           {"venue_of_heat", model.venue_of_heat},
           {"v", model.v},
           {"h", model.h},
           {"n_observations", model.n_observations},
           {"ascent_trace", model.ascent_trace}};
  return out.dump(2) + "\n";
}

void save_model_json(const MixedGGModel& model, const RunInfo& run, const std::string& path) {
  write_text_file(path, model_to_json(model, run));
}

MixedGGModel load_model_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::runtime_error("corrupt model file '" + path + "': " + e.what());
  }
  MixedGGModel model;
  try {
    model.beta0 = doc.at("beta0").get<double>();
    model.gamma0 = doc.at("gamma0").get<double>();
    model.nu = doc.at("nu").get<double>();
    model.tau_v = doc.at("tau_v").get<double>();
    model.tau_h = doc.at("tau_h").get<double>();
    model.se_beta0 = doc.value("se_beta0", 0.0);
    model.se_gamma0 = doc.value("se_gamma0", 0.0);
    model.se_nu = doc.value("se_nu", 0.0);
    model.loglik_penalized = doc.value("loglik_penalized", 0.0);
    model.converged = doc.value("converged", false);
    model.n_iterations = doc.value("n_iterations", 0);
    model.tau_v_boundary = doc.value("tau_v_boundary", false);
    model.tau_h_boundary = doc.value("tau_h_boundary", false);
    model.venue_years = doc.value("venue_years", std::vector<int>{});
    model.heat_ids = doc.value("heat_ids", std::vector<std::string>{});
    model.venue_of_heat = doc.value("venue_of_heat", std::vector<int>{});
    model.v = doc.value("v", std::vector<double>{});
    model.h = doc.value("h", std::vector<double>{});
    model.n_observations = doc.value("n_observations", std::size_t{0});
    model.ascent_trace = doc.value("ascent_trace", std::vector<double>{});
  } catch (const std::exception& e) {
    throw std::runtime_error("corrupt model file '" + path + "': " + e.what());
  }
  return model;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace sprintrt
