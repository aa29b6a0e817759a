#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qtors {

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json got;
  bool pass = false;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, nlohmann::json expected, nlohmann::json got, bool pass) {
    checks.push_back({std::move(name), std::move(expected), std::move(got), pass});
  }
  /// Passes when `got == expected`.
  void expect(std::string name, const nlohmann::json& expected, const nlohmann::json& got) {
    add(std::move(name), expected, got, expected == got);
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  nlohmann::json to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : checks)
      list.push_back({{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    return {{"title", title}, {"pass", all_pass()}, {"checks", list}};
  }
  std::string to_text() const {
    std::string out = title + "\n";
    for (const auto& c : checks)
      out += std::string(c.pass ? "  ok    " : "  FAIL  ") + c.name + ": " + c.got.dump() +
             (c.pass ? "" : " (expected " + c.expected.dump() + ")") + "\n";
    return out;
  }
};

}  // namespace qtors
