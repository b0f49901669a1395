#include "spinhecke/report.hpp"

#include <cmath>

namespace spinhecke {

Check make_check(std::string name, bool holds, bool expected, std::chrono::steady_clock::time_point start,
                 std::string detail) {
  auto dt = std::chrono::steady_clock::now() - start;
  Check c;
  c.relation = std::move(name);
  c.holds = holds;
  c.expected = expected;
  c.millis = std::chrono::duration<double, std::milli>(dt).count();
  c.detail = std::move(detail);
  return c;
}

bool all_pass(const Report& r) {
  for (const auto& c : r)
    if (!c.pass()) return false;
  return true;
}

void append(Report& into, const Report& more) { into.insert(into.end(), more.begin(), more.end()); }

nlohmann::ordered_json report_json(const Report& r, bool timings) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : r) {
    nlohmann::ordered_json j;
    j["relation"] = c.relation;
    j["status"] = c.pass() ? "pass" : "fail";
    if (!c.expected) j["expected_failure"] = true;
    if (timings) j["millis"] = std::llround(c.millis);
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace spinhecke
