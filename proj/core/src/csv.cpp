#include "sprintrt/csv.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace sprintrt {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

double parse_rt(const std::string& token) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("non-numeric rt_seconds '" + token + "'");
  }
  if (pos != token.size() || !std::isfinite(value)) {
    throw std::invalid_argument("non-numeric rt_seconds '" + token + "'");
  }
  return value;
}

bool parse_bool(const std::string& token) {
  if (token == "true") return true;
  if (token == "false") return false;
  throw std::invalid_argument("bad boolean '" + token + "' (expected true/false)");
}

int parse_year(const std::string& token) {
  if (token.size() != 4 || token.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad year '" + token + "'");
  }
  return std::stoi(token);
}

constexpr const char* kHeader = "athlete_id,gender,event,competition,year,round,heat_id,rt_seconds,dq";

}  // namespace

std::vector<RTRecord> load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file '" + path + "'");

  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) throw CsvError(path, 1, "empty file, missing header");
  ++line_no;
  if (strip_cr(line) != kHeader) {
    throw CsvError(path, 1, "bad header, expected '" + std::string(kHeader) + "'");
  }

  std::vector<RTRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 9) {
      throw CsvError(path, line_no,
                     "expected 9 fields, got " + std::to_string(fields.size()));
    }
    RTRecord rec;
    rec.source_line = line_no;
    try {
      rec.athlete_id = fields[0];
      rec.gender = parse_gender(fields[1]);
      rec.event = parse_event(fields[2]);
      rec.competition = parse_competition(fields[3]);
      rec.year = parse_year(fields[4]);
      rec.round = parse_round(fields[5]);
      rec.heat_id = fields[6];
      rec.rt_seconds = parse_rt(fields[7]);
      rec.dq = parse_bool(fields[8]);
    } catch (const std::exception& e) {
      throw CsvError(path, line_no, e.what());
    }
    if (rec.athlete_id.empty()) throw CsvError(path, line_no, "empty athlete_id");
    if (rec.heat_id.empty()) throw CsvError(path, line_no, "empty heat_id");
    if (rec.year != rec.competition.year) {
      throw CsvError(path, line_no, "year column disagrees with competition token");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<Exclusion> load_exclusions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open exclusion file '" + path + "'");
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) return {};
  ++line_no;
  if (strip_cr(line) != "athlete_id,heat_id,rt_seconds") {
    throw CsvError(path, 1, "bad header, expected 'athlete_id,heat_id,rt_seconds'");
  }
  std::vector<Exclusion> exclusions;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3) throw CsvError(path, line_no, "expected 3 fields");
    try {
      exclusions.push_back({fields[0], fields[1], parse_rt(fields[2])});
    } catch (const std::exception& e) {
      throw CsvError(path, line_no, e.what());
    }
  }
  return exclusions;
}

std::vector<RTRecord> apply_exclusions(std::vector<RTRecord> records,
                                       const std::vector<Exclusion>& exclusions) {
  if (exclusions.empty()) return records;
  std::vector<RTRecord> kept;
  kept.reserve(records.size());
  for (auto& rec : records) {
    bool excluded = false;
    for (const auto& ex : exclusions) {
      if (rec.athlete_id == ex.athlete_id && rec.heat_id == ex.heat_id &&
          std::fabs(rec.rt_seconds - ex.rt_seconds) < 1e-9) {
        excluded = true;
        break;
      }
    }
    if (!excluded) kept.push_back(std::move(rec));
  }
  return kept;
}

std::uint64_t file_fnv1a64(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const std::streamsize n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

}  // namespace sprintrt
