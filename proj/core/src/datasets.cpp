#include "sprintrt/datasets.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace sprintrt {

ClusteredSample ClusteredSample::from_clusters(std::vector<Cluster> clusters) {
  if (clusters.size() < 2) {
    throw InsufficientClusters("need at least 2 clusters, have " +
                               std::to_string(clusters.size()));
  }
  std::size_t total = 0;
  bool any_treatment = false;
  bool any_control = false;
  for (const auto& cluster : clusters) {
    if (cluster.observations.empty()) {
      throw std::invalid_argument("cluster '" + cluster.athlete_id + "' is empty");
    }
    for (const auto& obs : cluster.observations) {
      if (!(obs.value > 0.0)) {
        throw std::invalid_argument("cluster '" + cluster.athlete_id +
                                    "' contains a non-positive value");
      }
      (obs.treatment ? any_treatment : any_control) = true;
    }
    total += cluster.observations.size();
  }
  if (!any_treatment || !any_control) {
    throw std::invalid_argument("sample must contain both groups");
  }
  ClusteredSample sample;
  sample.clusters_ = std::move(clusters);
  sample.total_obs_ = total;
  return sample;
}

std::vector<std::size_t> ClusteredSample::cluster_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(clusters_.size());
  for (const auto& c : clusters_) sizes.push_back(c.observations.size());
  return sizes;
}

bool CompetitionFilter::contains(const Competition& c) const {
  return std::find(competitions.begin(), competitions.end(), c) != competitions.end();
}

std::string CompetitionFilter::describe() const {
  std::string out;
  for (const auto& c : competitions) {
    if (!out.empty()) out += "+";
    out += to_string(c);
  }
  return out.empty() ? "(none)" : out;
}

ClusteredSample build_clustered_sample(const std::vector<RTRecord>& records,
                                       const CompetitionFilter& treatment,
                                       const CompetitionFilter& control,
                                       std::optional<Gender> gender, bool pool_genders) {
  validate_heat_consistency(records);

  std::size_t n_treatment = 0;
  std::size_t n_control = 0;
  // athlete -> observations, ordered by first appearance for determinism.
  std::vector<std::string> order;
  std::unordered_map<std::string, Cluster> by_athlete;
  for (const auto& rec : records) {
    if (!pool_genders && gender && rec.gender != *gender) continue;
    const bool in_treatment = treatment.contains(rec.competition);
    const bool in_control = control.contains(rec.competition);
    if (!in_treatment && !in_control) continue;
    if (in_treatment) ++n_treatment;
    if (in_control) ++n_control;
    if (rec.rt_seconds <= 0.0) continue;  // negative reaction times are discarded
    auto [it, inserted] = by_athlete.try_emplace(rec.athlete_id);
    if (inserted) {
      it->second.athlete_id = rec.athlete_id;
      order.push_back(rec.athlete_id);
    }
    it->second.observations.push_back({rec.rt_seconds, in_treatment});
  }

  if (n_treatment == 0) throw EmptySelection("treatment filter " + treatment.describe());
  if (n_control == 0) throw EmptySelection("control filter " + control.describe());

  std::vector<Cluster> clusters;
  for (const auto& id : order) {
    auto& cluster = by_athlete.at(id);
    bool has_treatment = false;
    bool has_control = false;
    for (const auto& obs : cluster.observations) {
      (obs.treatment ? has_treatment : has_control) = true;
    }
    if (has_treatment && has_control) clusters.push_back(std::move(cluster));
  }

  if (clusters.size() < 2) {
    throw InsufficientClusters("only " + std::to_string(clusters.size()) +
                               " athletes appear in both groups");
  }
  return ClusteredSample::from_clusters(std::move(clusters));
}

ModelDataset ModelDataset::from_observations(std::vector<ModelObs> observations,
                                             std::vector<int> venue_years,
                                             std::vector<std::string> heat_ids,
                                             std::vector<int> venue_of_heat) {
  if (observations.empty()) throw EmptySelection("no observations");
  if (heat_ids.size() != venue_of_heat.size()) {
    throw std::invalid_argument("heat_ids and venue_of_heat sizes differ");
  }
  for (const auto& obs : observations) {
    if (!(obs.value > 0.0)) throw std::invalid_argument("non-positive model value");
    if (obs.venue < 0 || obs.venue >= static_cast<int>(venue_years.size()) || obs.heat < 0 ||
        obs.heat >= static_cast<int>(heat_ids.size())) {
      throw std::invalid_argument("observation index out of range");
    }
    if (venue_of_heat[static_cast<std::size_t>(obs.heat)] != obs.venue) {
      throw std::invalid_argument("heat '" + heat_ids[static_cast<std::size_t>(obs.heat)] +
                                  "' assigned to two venues");
    }
  }
  ModelDataset ds;
  ds.observations_ = std::move(observations);
  ds.venue_years_ = std::move(venue_years);
  ds.heat_ids_ = std::move(heat_ids);
  ds.venue_of_heat_ = std::move(venue_of_heat);
  return ds;
}

std::vector<int> ModelDataset::heats_per_venue() const {
  std::vector<int> counts(venue_years_.size(), 0);
  for (const int v : venue_of_heat_) ++counts[static_cast<std::size_t>(v)];
  return counts;
}

ModelDataset build_model_dataset(const std::vector<RTRecord>& records, Gender gender,
                                 bool include_2022, bool include_positive_dq,
                                 const std::set<Round>& rounds) {
  validate_heat_consistency(records);

  std::vector<const RTRecord*> kept;
  for (const auto& rec : records) {
    if (rec.competition.kind != CompetitionKind::world) continue;
    if (rec.gender != gender) continue;
    if (!rounds.contains(rec.round)) continue;
    if (rec.rt_seconds <= 0.0) continue;
    if (!include_2022 && rec.year == 2022) continue;
    if (!include_positive_dq && rec.dq) continue;
    kept.push_back(&rec);
  }
  if (kept.empty()) throw EmptySelection("model dataset filters matched no records");

  // Venue = year, ascending. Heats ordered by id within venue.
  std::map<int, int> venue_index;
  for (const auto* rec : kept) venue_index.emplace(rec->year, 0);
  std::vector<int> venue_years;
  for (auto& [year, idx] : venue_index) {
    idx = static_cast<int>(venue_years.size());
    venue_years.push_back(year);
  }

  std::map<std::pair<int, std::string>, int> heat_index;
  for (const auto* rec : kept) {
    heat_index.emplace(std::make_pair(venue_index.at(rec->year), rec->heat_id), 0);
  }
  std::vector<std::string> heat_ids;
  std::vector<int> venue_of_heat;
  for (auto& [key, idx] : heat_index) {
    idx = static_cast<int>(heat_ids.size());
    heat_ids.push_back(key.second);
    venue_of_heat.push_back(key.first);
  }

  std::vector<ModelObs> observations;
  observations.reserve(kept.size());
  for (const auto* rec : kept) {
    const int venue = venue_index.at(rec->year);
    const int heat = heat_index.at({venue, rec->heat_id});
    observations.push_back({rec->rt_seconds, venue, heat});
  }
  return ModelDataset::from_observations(std::move(observations), std::move(venue_years),
                                         std::move(heat_ids), std::move(venue_of_heat));
}

void validate_heat_consistency(const std::vector<RTRecord>& records) {
  struct HeatMeta {
    int year;
    Round round;
    Event event;
    Gender gender;
  };
  std::unordered_map<std::string, HeatMeta> seen;
  for (const auto& rec : records) {
    auto [it, inserted] =
        seen.try_emplace(rec.heat_id, HeatMeta{rec.year, rec.round, rec.event, rec.gender});
    if (!inserted) {
      const auto& meta = it->second;
      if (meta.year != rec.year || meta.round != rec.round || meta.event != rec.event ||
          meta.gender != rec.gender) {
        throw std::invalid_argument("heat '" + rec.heat_id +
                                    "' appears with inconsistent year/round/event/gender");
      }
    }
  }
}

}  // namespace sprintrt
