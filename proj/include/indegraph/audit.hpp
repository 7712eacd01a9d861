#pragma once

// Per-n comparison of claimed values against ground truth, and sweeps over
// ranges of n with first-counterexample summaries.
//
// Ground truth comes from the explicit graph (oracle_graph.hpp) while n is
// within the configured limits and from closed_forms.hpp beyond them; every
// verdict records which of the two produced it.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indegraph/oracle_graph.hpp"
#include "indegraph/zn_core.hpp"

namespace indegraph {

enum class TheoremId {
  kL2_5,
  kL2_6,
  kL2_6Swapped,
  kT2_4,
  kT2_7,
  kT2_10,
  kT2_12,
  kC2_13,
  kT2_14,
  kT2_15,
  kT2_16,
  kT2_17,
  kR2_18,
  kT3_1,
  kT3_2,
  kT3_3,
  kC3_4,
  kT4_1,
  kT4_3,
  kT4_4,
};

inline constexpr std::array kAllTheorems = {
    TheoremId::kL2_5,  TheoremId::kL2_6,  TheoremId::kL2_6Swapped, TheoremId::kT2_4,
    TheoremId::kT2_7,  TheoremId::kT2_10, TheoremId::kT2_12,       TheoremId::kC2_13,
    TheoremId::kT2_14, TheoremId::kT2_15, TheoremId::kT2_16,       TheoremId::kT2_17,
    TheoremId::kR2_18, TheoremId::kT3_1,  TheoremId::kT3_2,        TheoremId::kT3_3,
    TheoremId::kC3_4,  TheoremId::kT4_1,  TheoremId::kT4_3,        TheoremId::kT4_4,
};

/// "L2.5", "L2.6-swapped", "T2.10", ...
std::string_view to_string(TheoremId id);
/// Throws std::invalid_argument for an unknown label.
TheoremId parse_theorem_id(std::string_view label);
/// Short formula-level description of what is checked.
std::string_view statement_gloss(TheoremId id);

enum class VerdictStatus { kMatch, kMismatch, kNotApplicable, kSkippedOracleLimit };
enum class GroundTruthMode { kOracle, kClosedForm };

std::string_view to_string(VerdictStatus s);
std::string_view to_string(GroundTruthMode m);
VerdictStatus parse_verdict_status(std::string_view s);
GroundTruthMode parse_ground_truth_mode(std::string_view s);

struct TheoremVerdict {
  TheoremId theorem{};
  std::uint64_t n = 0;
  VerdictStatus status = VerdictStatus::kNotApplicable;
  std::string claimed;
  std::string observed;
  /// Always set for kMismatch.
  std::optional<std::string> witness;
  GroundTruthMode ground_truth = GroundTruthMode::kOracle;

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

struct AuditConfig {
  OracleLimits limits;
  /// Audit the |N_n| lemma as printed and with its cases swapped. A disabled
  /// reading is reported NOT_APPLICABLE.
  bool printed_neither_reading = true;
  bool swapped_neither_reading = true;
  /// Beyond the oracle limits, take ground truth from the validated closed
  /// forms. When false those verdicts are SKIPPED_ORACLE_LIMIT instead.
  bool closed_form_fallback = true;

  friend bool operator==(const AuditConfig& a, const AuditConfig& b) {
    return a.limits.build_limit == b.limits.build_limit &&
           a.limits.exact_search_limit == b.limits.exact_search_limit &&
           a.limits.hamiltonian_limit == b.limits.hamiltonian_limit &&
           a.printed_neither_reading == b.printed_neither_reading &&
           a.swapped_neither_reading == b.swapped_neither_reading &&
           a.closed_form_fallback == b.closed_form_fallback;
  }
};

/// One verdict per TheoremId, in kAllTheorems order.
std::vector<TheoremVerdict> audit_n(Modulus n, const AuditConfig& config = {});

struct NAudit {
  std::uint64_t n = 0;
  std::vector<TheoremVerdict> verdicts;
  friend bool operator==(const NAudit&, const NAudit&) = default;
};

struct TheoremSummary {
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t skipped = 0;
  std::uint64_t not_applicable = 0;
  std::optional<std::uint64_t> first_counterexample;
  friend bool operator==(const TheoremSummary&, const TheoremSummary&) = default;
};

struct SweepReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  AuditConfig config;
  /// Ascending by n, one entry per n in [lo, hi].
  std::vector<NAudit> results;
  std::map<TheoremId, TheoremSummary> summary;

  /// Number of n whose graph-level verdicts came from each tier.
  std::uint64_t count_mode(GroundTruthMode mode) const;
};

std::map<TheoremId, TheoremSummary> summarize(const std::vector<NAudit>& results);

/// Audits every n in [lo, hi] on `jobs` worker threads. Output ordering does
/// not depend on `jobs`. Throws std::invalid_argument unless 2 <= lo <= hi.
SweepReport sweep(std::uint64_t lo, std::uint64_t hi, const AuditConfig& config = {},
                  unsigned jobs = 1);

enum class ReportFormat { kMarkdown, kJson, kCsv };

std::string render_report(const SweepReport& report, ReportFormat format);

/// Inverse of render_report(kJson). The summary is recomputed from the
/// verdicts. Throws std::invalid_argument on malformed input.
SweepReport parse_report_json(std::string_view text);

}  // namespace indegraph
