#include "mlat/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace mlat {

void RunReport::add(const std::string& name, const std::string& expected,
                    const std::string& actual) {
  checks.push_back({name, expected, actual, expected == actual});
}

void RunReport::add_ok(const std::string& name, bool ok) {
  checks.push_back({name, "true", ok ? "true" : "false", ok});
}

void RunReport::note(const std::string& name, const std::string& value) {
  checks.push_back({name, value, value, true});
}

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "# " << command << "\n";
  for (const Check& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (c.expected == c.actual) {
      os << ": " << c.actual;
    } else {
      os << ": expected " << c.expected << ", got " << c.actual;
    }
    os << "\n";
  }
  std::size_t passed =
      static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(),
                                             [](const Check& c) { return c.pass; }));
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["expected"] = c.expected;
    row["actual"] = c.actual;
    row["pass"] = c.pass;
    doc["checks"].push_back(std::move(row));
  }
  doc["pass"] = all_pass();
  doc["exit_status"] = exit_status();
  return doc.dump(2) + "\n";
}

}  // namespace mlat
