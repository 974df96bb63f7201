#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sprintrt/clusrank.hpp"
#include "sprintrt/remixfit.hpp"
#include "sprintrt/tailsim.hpp"

namespace sprintrt {

// Every report embeds the resolved run configuration, the seed, and a
// checksum of the dataset it was computed from.
struct RunInfo {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;  // resolved flags, in order
  std::uint64_t seed = 0;
  std::string data_path;
  std::uint64_t dataset_checksum = 0;
};

struct TestReport {
  RunInfo run;
  std::string comparison;
  std::string gender;  // men, women, or pooled
  std::size_t n_athletes = 0;
  std::size_t n_rts = 0;
  bool asymptotic_only = false;
  long moment_permutations = 0;
  ClusRankResult result;
};

std::string test_report_to_json(const TestReport& report);

std::string tail_report_to_json(const TailReport& report, const RunInfo& run);
std::string tail_report_to_csv(const TailReport& report);

// Full-precision round trip of a fitted model (all fields, including the
// random-effect values and index structure).
std::string model_to_json(const MixedGGModel& model, const RunInfo& run);
void save_model_json(const MixedGGModel& model, const RunInfo& run, const std::string& path);
MixedGGModel load_model_json(const std::string& path);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace sprintrt
