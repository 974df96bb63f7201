#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sprintrt/records.hpp"

namespace sprintrt {

// Parse failure with the 1-based source line and, when known, the column name.
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& path, long line, const std::string& what_failed)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what_failed), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Loads the reaction-time CSV. Expected header:
//   athlete_id,gender,event,competition,year,round,heat_id,rt_seconds,dq
// Booleans are true/false; rt_seconds is a decimal number of seconds.
std::vector<RTRecord> load_csv(const std::string& path);

// Exclusion list CSV with header athlete_id,heat_id,rt_seconds. A record is
// excluded when all three fields match (rt compared at 1e-9).
struct Exclusion {
  std::string athlete_id;
  std::string heat_id;
  double rt_seconds;
};

std::vector<Exclusion> load_exclusions(const std::string& path);

std::vector<RTRecord> apply_exclusions(std::vector<RTRecord> records,
                                       const std::vector<Exclusion>& exclusions);

// FNV-1a (64-bit) over the raw bytes of a file; reports embed this so a
// result can be traced to the exact dataset revision that produced it.
std::uint64_t file_fnv1a64(const std::string& path);

}  // namespace sprintrt
