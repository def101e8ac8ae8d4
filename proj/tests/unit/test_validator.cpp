#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "josabpp/solver.hpp"
#include "josabpp/validator.hpp"
#include "support/fixtures.hpp"

using namespace josabpp;
using testsupport::annotate;
using testsupport::make_micro_instance;
using testsupport::make_mutation_fixture;
using testsupport::MutationFixture;

namespace {

std::set<int> constraints_of(const ValidationReport& report) {
  std::set<int> out;
  for (const Violation& v : report.violations) out.insert(v.constraint);
  return out;
}

// The kill check: the mutation must flip the report from feasible to
// infeasible and every reported problem must be the targeted constraint.
void expect_only(const Instance& ins, const Solution& mutant, int constraint) {
  const ValidationReport report = validate(ins, mutant);
  CHECK(!report.feasible);
  REQUIRE(!report.violations.empty());
  CHECK(constraints_of(report) == std::set<int>{constraint});
}

}  // namespace

TEST_SUITE("validator") {

TEST_CASE("the hand-built baseline is feasible") {
  const MutationFixture fx = make_mutation_fixture();
  const ValidationReport report = validate(fx.instance, fx.base);
  CHECK(report.feasible);
  CHECK(report.violations.empty());
  CHECK(report.warnings.empty());
  CHECK(report.objective == fx.base.objective);
  CHECK(report.pcpi == fx.base.pcpi);
}

TEST_CASE("each minimal mutation trips exactly its own constraint") {
  const MutationFixture fx = make_mutation_fixture();
  SUBCASE("(2) order in two batches") {
    expect_only(fx.instance, testsupport::mutate_duplicate_order(fx), 2);
  }
  SUBCASE("(3) item in two picklists") {
    expect_only(fx.instance, testsupport::mutate_duplicate_item(fx), 3);
  }
  SUBCASE("(4) ordered article left unpicked") {
    expect_only(fx.instance, testsupport::mutate_drop_item(fx), 4);
  }
  SUBCASE("(5) picklist crossing zones") {
    expect_only(fx.instance, testsupport::mutate_cross_zone(fx), 5);
  }
  SUBCASE("(6) picklist over the volume cap") {
    expect_only(fx.instance, testsupport::mutate_overfull_picklist(fx), 6);
  }
  SUBCASE("(7) batch over the order cap") {
    expect_only(fx.instance, testsupport::mutate_extra_order(fx), 7);
  }
  SUBCASE("(8) goal missed with orders left") {
    expect_only(fx.instance, testsupport::mutate_drop_batch(fx), 8);
  }
}

TEST_CASE("goal shortfall reports batch level details") {
  const MutationFixture fx = make_mutation_fixture();
  const Solution mutant = testsupport::mutate_drop_batch(fx);
  const ValidationReport report = validate(fx.instance, mutant);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].constraint == 8);
  CHECK(report.violations[0].batch == -1);
  CHECK(report.violations[0].detail.find("orders left") != std::string::npos);
}

TEST_CASE("legal pool exhaustion is a warning, not a violation") {
  Instance ins = make_micro_instance();
  ins.params.item_goal = 3;  // demand tops out at 1
  Solution sol = solve(ins, SolverConfig{Algorithm::DGA, 0});
  const ValidationReport report = validate(ins, sol);
  CHECK(report.feasible);
  CHECK(report.violations.empty());
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].constraint == 8);
  CHECK(report.warnings[0].detail.find("exhausted") != std::string::npos);
}

TEST_CASE("dangling references are reported and quarantined") {
  const MutationFixture fx = make_mutation_fixture();

  SUBCASE("unknown item id") {
    Solution s = fx.base;
    s.batches[0].picklists[0].items[0] = 99;
    const ValidationReport report = validate(fx.instance, s);
    CHECK(!report.feasible);
    CHECK(constraints_of(report) == std::set<int>{0});
    // integrity recomputation must not pile on top of the broken reference
    for (const Violation& v : report.violations) {
      CHECK(v.detail.find("objective") == std::string::npos);
    }
  }
  SUBCASE("unknown order id") {
    Solution s = fx.base;
    s.batches[1].orders = {2, 77};
    const ValidationReport report = validate(fx.instance, s);
    CHECK(!report.feasible);
    CHECK(constraints_of(report) == std::set<int>{0});
  }
  SUBCASE("unknown zone id") {
    Solution s = fx.base;
    s.batches[0].picklists[0].zone = 9;
    const ValidationReport report = validate(fx.instance, s);
    CHECK(!report.feasible);
    CHECK(constraints_of(report).count(0) == 1);
  }
  SUBCASE("solution naming a different instance") {
    Solution s = fx.base;
    s.instance = "somewhere_else";
    const ValidationReport report = validate(fx.instance, s);
    CHECK(!report.feasible);
    CHECK(constraints_of(report) == std::set<int>{0});
  }
}

TEST_CASE("bookkeeping drift is an integrity violation") {
  const MutationFixture fx = make_mutation_fixture();
  auto drifted = [&fx](auto&& mutate) {
    Solution s = fx.base;
    mutate(s);
    const ValidationReport report = validate(fx.instance, s);
    CHECK(!report.feasible);
    CHECK(constraints_of(report) == std::set<int>{0});
    return report;
  };
  drifted([](Solution& s) { s.objective += 1.0; });
  drifted([](Solution& s) { s.pcpi *= 1.5; });
  drifted([](Solution& s) { s.selected_items -= 1; });
  drifted([](Solution& s) { s.goal_met = false; });
}

TEST_CASE("standalone recomputations") {
  const MutationFixture fx = make_mutation_fixture();
  CHECK(objective(fx.instance, fx.base) == fx.base.objective);
  CHECK(pcpi(fx.instance, fx.base) == fx.base.objective / 8.0);

  Solution bad = fx.base;
  bad.objective += 2.0;
  CHECK_THROWS_AS(objective(fx.instance, bad), std::runtime_error);

  Solution empty;
  empty.instance = fx.instance.name;
  empty.algorithm = "dga";
  CHECK_THROWS_AS(pcpi(fx.instance, empty), std::domain_error);
}

TEST_CASE("reports render to json and text") {
  const MutationFixture fx = make_mutation_fixture();
  const ValidationReport good = validate(fx.instance, fx.base);
  const auto j = nlohmann::json::parse(report_to_json(good));
  CHECK(j.at("feasible").get<bool>());
  CHECK(j.at("objective").get<double>() == fx.base.objective);
  CHECK(j.at("violations").is_array());
  CHECK(j.at("violations").empty());

  const ValidationReport bad =
      validate(fx.instance, testsupport::mutate_extra_order(fx));
  const auto jb = nlohmann::json::parse(report_to_json(bad));
  CHECK(!jb.at("feasible").get<bool>());
  REQUIRE(jb.at("violations").size() == 1);
  CHECK(jb.at("violations")[0].at("constraint").get<int>() == 7);

  const std::string text = report_to_text(bad);
  CHECK(text.find("constraint 7") != std::string::npos);
}

}  // TEST_SUITE
