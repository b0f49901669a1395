#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace spinhecke {

struct Check {
  std::string relation;
  bool holds = false;
  bool expected = true;  // false for checks that are meant to fail
  double millis = 0;
  std::string detail;

  bool pass() const { return holds == expected; }
};

using Report = std::vector<Check>;

Check make_check(std::string name, bool holds, bool expected, std::chrono::steady_clock::time_point start,
                 std::string detail = "");

bool all_pass(const Report& r);
void append(Report& into, const Report& more);

// [{relation, status, millis}], millis (whole milliseconds) omitted when timings is false.
nlohmann::ordered_json report_json(const Report& r, bool timings);

}  // namespace spinhecke
