#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sprintrt/records.hpp"

namespace sprintrt {

class EmptySelection : public std::runtime_error {
 public:
  explicit EmptySelection(const std::string& detail)
      : std::runtime_error("empty selection: " + detail) {}
};

class InsufficientClusters : public std::runtime_error {
 public:
  explicit InsufficientClusters(const std::string& detail)
      : std::runtime_error("insufficient clusters: " + detail) {}
};

// ---------------------------------------------------------------------------
// Clustered two-group sample for the rank test. One cluster per athlete;
// group membership varies within clusters (subunit-level grouping).
// ---------------------------------------------------------------------------

struct ClusterObs {
  double value;
  bool treatment;
};

struct Cluster {
  std::string athlete_id;
  std::vector<ClusterObs> observations;
};

class ClusteredSample {
 public:
  // Validates: n >= 2 clusters, all values > 0, and both groups present in
  // the sample. Throws std::invalid_argument on violation. Clusters whose
  // observations all share one label are legal here (the statistic is still
  // defined); the athlete-level both-groups rule is enforced by
  // build_clustered_sample, and a sample with no within-cluster label
  // variation at all yields a degenerate permutation null.
  static ClusteredSample from_clusters(std::vector<Cluster> clusters);

  const std::vector<Cluster>& clusters() const { return clusters_; }
  std::size_t cluster_count() const { return clusters_.size(); }
  std::size_t total_observations() const { return total_obs_; }
  std::vector<std::size_t> cluster_sizes() const;

 private:
  ClusteredSample() = default;
  std::vector<Cluster> clusters_;
  std::size_t total_obs_ = 0;
};

// Which competitions form a rank-test group.
struct CompetitionFilter {
  std::vector<Competition> competitions;
  bool contains(const Competition& c) const;
  std::string describe() const;
};

// Builds the athlete-clustered sample: negative reaction times dropped,
// positive disqualified ones kept, athletes present in only one of the two
// groups dropped entirely. Treatment carries group indicator 1.
ClusteredSample build_clustered_sample(const std::vector<RTRecord>& records,
                                       const CompetitionFilter& treatment,
                                       const CompetitionFilter& control,
                                       std::optional<Gender> gender,
                                       bool pool_genders);

// ---------------------------------------------------------------------------
// Venue/heat-indexed dataset for the mixed model. Venue = championship year;
// heats are nested within venues.
// ---------------------------------------------------------------------------

struct ModelObs {
  double value;
  int venue;  // 0-based venue index
  int heat;   // 0-based global heat index, nested in venue
};

class ModelDataset {
 public:
  static ModelDataset from_observations(std::vector<ModelObs> observations,
                                        std::vector<int> venue_years,
                                        std::vector<std::string> heat_ids,
                                        std::vector<int> venue_of_heat);

  const std::vector<ModelObs>& observations() const { return observations_; }
  std::size_t size() const { return observations_.size(); }
  int venue_count() const { return static_cast<int>(venue_years_.size()); }
  int heat_count() const { return static_cast<int>(heat_ids_.size()); }
  const std::vector<int>& venue_years() const { return venue_years_; }
  const std::vector<std::string>& heat_ids() const { return heat_ids_; }
  const std::vector<int>& venue_of_heat() const { return venue_of_heat_; }
  std::vector<int> heats_per_venue() const;

 private:
  ModelDataset() = default;
  std::vector<ModelObs> observations_;
  std::vector<int> venue_years_;
  std::vector<std::string> heat_ids_;
  std::vector<int> venue_of_heat_;
};

// World Championships rows only, filtered to the given rounds (semifinal and
// final by default), negative values always dropped. Venue index = year.
ModelDataset build_model_dataset(const std::vector<RTRecord>& records, Gender gender,
                                 bool include_2022, bool include_positive_dq,
                                 const std::set<Round>& rounds = {Round::semifinal, Round::final});

// Checks that every heat_id maps to a single (year, round, event, gender);
// throws std::invalid_argument naming the offending heat on violation.
void validate_heat_consistency(const std::vector<RTRecord>& records);

}  // namespace sprintrt
