#include "assoc/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace assoc;

TEST_CASE("verification suite up to arity 4") {
  VerifyOptions o;
  o.max_arity = 4;
  o.samples = 50;
  o.weights = 3;
  auto report = run_verification(o);
  for (const auto& r : report) {
    INFO(format_line(r));
    CHECK(r.ok);
  }
  auto cones = std::find_if(report.begin(), report.end(),
                            [](const CheckResult& r) { return r.check == "magical_vs_cones" && r.arity == 4; });
  REQUIRE(cones != report.end());
  CHECK(format_line(*cones) == "magical_vs_cones: 6 = 6 pairs, OK");

  auto again = run_verification(o);
  REQUIRE(again.size() == report.size());
  for (std::size_t i = 0; i < report.size(); ++i) {
    CHECK(again[i].check == report[i].check);
    CHECK(again[i].counts == report[i].counts);
  }
}

TEST_CASE("arity 2 is trivially fine") {
  VerifyOptions o;
  o.max_arity = 2;
  for (const auto& r : run_verification(o)) CHECK(r.ok);
  CHECK(format_line(check_magical_vs_cones(2)) == "magical_vs_cones: 1 = 1 pairs, OK");
}

TEST_CASE("failures are reported, not thrown") {
  CheckResult r = check_vh_agreement(0, 1, 1);
  CHECK_FALSE(r.ok);
  CHECK(r.counts.rfind("error:", 0) == 0);
  CHECK(format_line(r).find("FAIL") != std::string::npos);
}
