#include "sprintrt/records.hpp"

#include <stdexcept>

namespace sprintrt {

std::string to_string(Gender g) { return g == Gender::men ? "men" : "women"; }

std::string to_string(Event e) {
  switch (e) {
    case Event::dash100: return "dash100";
    case Event::hurdles100: return "hurdles100";
    case Event::hurdles110: return "hurdles110";
  }
  return "?";
}

std::string to_string(Round r) {
  switch (r) {
    case Round::heat: return "heat";
    case Round::semifinal: return "semifinal";
    case Round::final: return "final";
  }
  return "?";
}

std::string to_string(const Competition& c) {
  if (c.kind == CompetitionKind::national) return "national" + std::to_string(c.year);
  return "world" + std::to_string(c.year);
}

Gender parse_gender(const std::string& token) {
  if (token == "men") return Gender::men;
  if (token == "women") return Gender::women;
  throw std::invalid_argument("unknown gender token '" + token + "'");
}

Event parse_event(const std::string& token) {
  if (token == "dash100") return Event::dash100;
  if (token == "hurdles100") return Event::hurdles100;
  if (token == "hurdles110") return Event::hurdles110;
  throw std::invalid_argument("unknown event token '" + token + "'");
}

Round parse_round(const std::string& token) {
  if (token == "heat") return Round::heat;
  if (token == "semifinal") return Round::semifinal;
  if (token == "final") return Round::final;
  throw std::invalid_argument("unknown round token '" + token + "'");
}

Competition parse_competition(const std::string& token) {
  CompetitionKind kind;
  std::size_t prefix_len;
  if (token.rfind("national", 0) == 0) {
    kind = CompetitionKind::national;
    prefix_len = 8;
  } else if (token.rfind("world", 0) == 0) {
    kind = CompetitionKind::world;
    prefix_len = 5;
  } else {
    throw std::invalid_argument("unknown competition token '" + token + "'");
  }
  const std::string digits = token.substr(prefix_len);
  if (digits.size() != 4 || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("unknown competition token '" + token + "'");
  }
  return Competition{kind, std::stoi(digits)};
}

}  // namespace sprintrt
