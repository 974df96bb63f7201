#pragma once

#include <string>

namespace sprintrt {

enum class Gender { men, women };

enum class Event { dash100, hurdles100, hurdles110 };

enum class Round { heat, semifinal, final };

// Competition identity: the 2022 national-championship pool, or a World
// Championships edition identified by year.
enum class CompetitionKind { national, world };

struct Competition {
  CompetitionKind kind;
  int year;

  bool operator==(const Competition&) const = default;
};

// One observed reaction time. Raw values are carried as recorded: negative
// reaction times and positive disqualified ones are kept here and handled
// by the dataset builders, not at ingestion.
struct RTRecord {
  std::string athlete_id;
  Gender gender;
  Event event;
  Competition competition;
  int year;
  Round round;
  std::string heat_id;
  double rt_seconds;
  bool dq;
  long source_line = 0;  // 1-based line in the source CSV, for error reporting
};

std::string to_string(Gender g);
std::string to_string(Event e);
std::string to_string(Round r);
std::string to_string(const Competition& c);

Gender parse_gender(const std::string& token);
Event parse_event(const std::string& token);
Round parse_round(const std::string& token);
Competition parse_competition(const std::string& token);

}  // namespace sprintrt
