#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "indegraph/audit.hpp"

using namespace indegraph;

namespace {

const TheoremVerdict& find(const std::vector<TheoremVerdict>& vs, TheoremId id) {
  auto it = std::find_if(vs.begin(), vs.end(), [&](const auto& v) { return v.theorem == id; });
  REQUIRE(it != vs.end());
  return *it;
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line);) count += line.rfind(prefix, 0) == 0;
  return count;
}

}  // namespace

TEST_CASE("theorem labels round-trip") {
  for (auto id : kAllTheorems) {
    CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK_FALSE(statement_gloss(id).empty());
  }
  CHECK(to_string(TheoremId::kL2_6Swapped) == "L2.6-swapped");
  CHECK_THROWS_AS(parse_theorem_id("T9.9"), std::invalid_argument);
  CHECK(parse_verdict_status("SKIPPED_ORACLE_LIMIT") == VerdictStatus::kSkippedOracleLimit);
  CHECK(parse_ground_truth_mode("CLOSED_FORM") == GroundTruthMode::kClosedForm);
}

TEST_CASE("audit of n = 6") {
  const auto vs = audit_n(Modulus(6));
  REQUIRE(vs.size() == kAllTheorems.size());
  for (std::size_t i = 0; i < vs.size(); ++i) CHECK(vs[i].theorem == kAllTheorems[i]);

  const auto& l26 = find(vs, TheoremId::kL2_6);
  CHECK(l26.status == VerdictStatus::kMismatch);
  CHECK(l26.claimed == "3");
  CHECK(l26.observed == "2");
  CHECK(l26.witness.has_value());
  CHECK(find(vs, TheoremId::kL2_6Swapped).status == VerdictStatus::kMatch);
  CHECK(find(vs, TheoremId::kT2_10).status == VerdictStatus::kMatch);
  CHECK(find(vs, TheoremId::kT3_1).status == VerdictStatus::kNotApplicable);
  CHECK(find(vs, TheoremId::kT4_1).status == VerdictStatus::kMatch);
  const auto& t43 = find(vs, TheoremId::kT4_3);
  CHECK(t43.status == VerdictStatus::kMismatch);
  CHECK(t43.claimed == "7");
  CHECK(t43.observed == "4");
  CHECK(t43.ground_truth == GroundTruthMode::kOracle);
  CHECK(find(vs, TheoremId::kT4_4).claimed == "STRONGLY_PERFECT");
}

TEST_CASE("audit examples from the known counterexamples") {
  CHECK(find(audit_n(Modulus(9)), TheoremId::kT2_17).status == VerdictStatus::kMismatch);
  const auto& t210 = find(audit_n(Modulus(10)), TheoremId::kT2_10);
  CHECK(t210.status == VerdictStatus::kMismatch);
  CHECK(t210.claimed == "37");
  CHECK(t210.observed == "33");
  CHECK(find(audit_n(Modulus(12)), TheoremId::kT2_7).status == VerdictStatus::kMismatch);
  CHECK(find(audit_n(Modulus(5)), TheoremId::kR2_18).status == VerdictStatus::kMismatch);
  CHECK(find(audit_n(Modulus(15)), TheoremId::kC3_4).status == VerdictStatus::kMatch);
}

TEST_CASE("every verdict at n = 2 matches or is not applicable") {
  for (const auto& v : audit_n(Modulus(2))) {
    CAPTURE(to_string(v.theorem));
    CHECK((v.status == VerdictStatus::kMatch || v.status == VerdictStatus::kNotApplicable));
  }
  const auto vs = audit_n(Modulus(2));
  CHECK(find(vs, TheoremId::kT2_10).status == VerdictStatus::kNotApplicable);
  CHECK(find(vs, TheoremId::kL2_6).status == VerdictStatus::kNotApplicable);
}

TEST_CASE("sweep over [2, 20]: first counterexamples") {
  const auto report = sweep(2, 20);
  REQUIRE(report.results.size() == 19);
  const std::map<TheoremId, std::uint64_t> expected_first = {
      {TheoremId::kL2_6, 3},   {TheoremId::kT2_7, 12}, {TheoremId::kT2_10, 10},
      {TheoremId::kT2_17, 9},  {TheoremId::kT4_1, 5},  {TheoremId::kT4_3, 4},
      {TheoremId::kR2_18, 5},
  };
  for (const auto& [id, first] : expected_first) {
    CAPTURE(to_string(id));
    CHECK(report.summary.at(id).first_counterexample == first);
  }
  for (auto id : {TheoremId::kT2_4, TheoremId::kT2_15, TheoremId::kT2_16, TheoremId::kT3_1,
                  TheoremId::kT3_2, TheoremId::kT3_3, TheoremId::kL2_5, TheoremId::kL2_6Swapped}) {
    CAPTURE(to_string(id));
    CHECK(report.summary.at(id).fails == 0);
    CHECK_FALSE(report.summary.at(id).first_counterexample.has_value());
  }
}

TEST_CASE("sweep completeness and summary consistency") {
  const auto report = sweep(2, 60);
  for (std::uint64_t i = 0; i < report.results.size(); ++i) {
    const auto& r = report.results[i];
    CHECK(r.n == 2 + i);
    REQUIRE(r.verdicts.size() == kAllTheorems.size());
    for (std::size_t k = 0; k < kAllTheorems.size(); ++k) {
      CHECK(r.verdicts[k].theorem == kAllTheorems[k]);
      CHECK(r.verdicts[k].n == r.n);
      if (r.verdicts[k].status == VerdictStatus::kMismatch) CHECK(r.verdicts[k].witness.has_value());
    }
  }
  for (const auto& [id, s] : report.summary) {
    CHECK(s.holds + s.fails + s.skipped + s.not_applicable == report.results.size());
    CHECK(s.first_counterexample.has_value() == (s.fails > 0));
  }
}

TEST_CASE("first counterexample is stable when the range grows") {
  const auto small = sweep(2, 30);
  const auto large = sweep(2, 80);
  for (const auto& [id, s] : small.summary) {
    if (s.first_counterexample) CHECK(large.summary.at(id).first_counterexample == s.first_counterexample);
    CHECK(large.summary.at(id).fails >= s.fails);
  }
}

TEST_CASE("sweep output does not depend on the number of jobs") {
  const auto one = sweep(2, 64, {}, 1);
  const auto many = sweep(2, 64, {}, 7);
  CHECK(one.results == many.results);
  CHECK(render_report(one, ReportFormat::kJson) == render_report(many, ReportFormat::kJson));
  CHECK(render_report(one, ReportFormat::kCsv) == render_report(many, ReportFormat::kCsv));
}

TEST_CASE("closed-form fallback beyond the build limit") {
  AuditConfig config;
  config.limits.build_limit = 10;
  const auto report = sweep(8, 14, config);
  CHECK(report.count_mode(GroundTruthMode::kOracle) == 3);
  CHECK(report.count_mode(GroundTruthMode::kClosedForm) == 4);
  const auto& t210 = find(report.results.back().verdicts, TheoremId::kT2_10);
  CHECK(t210.ground_truth == GroundTruthMode::kClosedForm);
  CHECK(t210.status == VerdictStatus::kMismatch);
  CHECK(report.summary == sweep(8, 14).summary);
}

TEST_CASE("disabled fallback reports SKIPPED_ORACLE_LIMIT") {
  AuditConfig config;
  config.limits.build_limit = 10;
  config.closed_form_fallback = false;
  const auto vs = audit_n(Modulus(12), config);
  const auto& t210 = find(vs, TheoremId::kT2_10);
  CHECK(t210.status == VerdictStatus::kSkippedOracleLimit);
  for (const auto& v : vs) {
    CHECK((v.status == VerdictStatus::kSkippedOracleLimit ||
           v.status == VerdictStatus::kNotApplicable));
  }
  const auto report = sweep(8, 12, config);
  CHECK(report.summary.at(TheoremId::kT2_10).skipped == 2);
}

TEST_CASE("disabled neither reading is not applicable") {
  AuditConfig config;
  config.printed_neither_reading = false;
  CHECK(find(audit_n(Modulus(6), config), TheoremId::kL2_6).status ==
        VerdictStatus::kNotApplicable);
}

TEST_CASE("invalid sweep ranges") {
  CHECK_THROWS_AS(sweep(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep(9, 3), std::invalid_argument);
}

TEST_CASE("CSV rendering") {
  const auto csv = render_report(sweep(2, 20), ReportFormat::kCsv);
  CHECK(csv.rfind("n,theorem,status,claimed,observed\n", 0) == 0);
  CHECK(csv.find("\n10,T2.10,MISMATCH,37,33\n") != std::string::npos);
  CHECK(count_lines_starting(csv, "") == 1 + 19 * kAllTheorems.size());
}

TEST_CASE("Markdown rendering has one row per theorem") {
  const auto md = render_report(sweep(2, 12), ReportFormat::kMarkdown);
  for (auto id : kAllTheorems) {
    CAPTURE(to_string(id));
    CHECK(count_lines_starting(md, "| " + std::string(to_string(id)) + " |") == 1);
  }
}

TEST_CASE("JSON round-trip") {
  AuditConfig config;
  config.limits.build_limit = 15;
  const auto report = sweep(2, 30, config, 3);
  const auto text = render_report(report, ReportFormat::kJson);
  const auto back = parse_report_json(text);
  CHECK(back.lo == report.lo);
  CHECK(back.hi == report.hi);
  CHECK(back.config == report.config);
  CHECK(back.results == report.results);
  CHECK(back.summary == report.summary);
  CHECK(render_report(back, ReportFormat::kJson) == text);
  CHECK_THROWS_AS(parse_report_json("{\"range\": 3}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_json("not json"), std::invalid_argument);
}
