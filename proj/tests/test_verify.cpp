#include <doctest.h>

#include <string>

#include "taitmap/catalog.hpp"
#include "taitmap/error.hpp"
#include "taitmap/reduction.hpp"
#include "taitmap/verify.hpp"

using namespace taitmap;

TEST_CASE("every suite passes on a short run") {
  verify::Options options;
  options.trials = 40;
  for (const auto& name : verify::suite_names()) {
    CAPTURE(name);
    const auto report = verify::run(name, options);
    CHECK(report.suite == name);
    CHECK(report.passed());
    CHECK(report.failing_instance.empty());
    CHECK_FALSE(report.properties.empty());
    for (const auto& p : report.properties) {
      CAPTURE(p.name);
      CHECK(p.trials > 0);
      CHECK(p.failures == 0);
    }
  }
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(verify::run("nope", {}), Error);
}

TEST_CASE("report text") {
  verify::Options options;
  options.trials = 4;
  options.seed = 17;
  const std::string text = verify::format_report(verify::lemma5(options));
  CHECK(text.find("seed 17") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("a tampered trace breaks conservation") {
  auto r = reduce(catalog::cube(), euler_weights());
  CHECK(verify::check_conservation(r.trace).worst_gap == 0);
  for (auto& node : r.trace.nodes) {
    if (node.move && node.move->kind == MoveKind::kBigon) {
      node.multiplier = 3;
      break;
    }
  }
  CHECK(verify::check_conservation(r.trace).worst_gap > 0);
}
