#pragma once

#include <string>
#include <vector>

namespace mlat {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Structured result of a command or verification suite: one row per check,
/// overall exit status 0 iff everything passed.
struct RunReport {
  std::string command;
  std::vector<Check> checks;

  void add(const std::string& name, const std::string& expected, const std::string& actual);
  void add_ok(const std::string& name, bool ok);
  void note(const std::string& name, const std::string& value);  // informational, always passes

  bool all_pass() const;
  int exit_status() const { return all_pass() ? 0 : 1; }

  std::string to_text() const;
  std::string to_json() const;  // stable key order; reparse/redump is identity
};

}  // namespace mlat
