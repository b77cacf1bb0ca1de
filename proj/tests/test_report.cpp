#include <doctest.h>

#include <json.hpp>

#include "mlat/error.hpp"
#include "mlat/report.hpp"
#include "mlat/verify.hpp"

using namespace mlat;

TEST_CASE("report status and rendering") {
  RunReport report;
  report.command = "demo";
  report.add("count", "3", "3");
  CHECK(report.all_pass());
  CHECK(report.exit_status() == 0);
  report.add("other", "1", "2");
  CHECK_FALSE(report.all_pass());
  CHECK(report.exit_status() == 1);
  const std::string text = report.to_text();
  CHECK(text.find("[PASS] count: 3") != std::string::npos);
  CHECK(text.find("[FAIL] other: expected 1, got 2") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);
}

TEST_CASE("json reports round-trip byte for byte") {
  RunReport report;
  report.command = "demo";
  report.add("count", "3", "3");
  report.note("monoid", "finite monoid of order 22");
  const std::string serialized = report.to_json();
  const auto parsed = nlohmann::ordered_json::parse(serialized);
  CHECK(parsed.dump(2) + "\n" == serialized);
  CHECK(parsed["pass"] == true);
  CHECK(parsed["checks"][0]["name"] == "count");
}

TEST_CASE("verification suites pass end to end") {
  CHECK(verify_lemmas().all_pass());
  CHECK(verify_fplus().all_pass());
  CHECK(verify_shapes().all_pass());
  CHECK_THROWS_AS(verify_suite("bogus"), BadParams);
}

TEST_CASE("suite reports are deterministic") {
  CHECK(verify_shapes().to_json() == verify_shapes().to_json());
}
