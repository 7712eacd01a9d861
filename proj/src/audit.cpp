#include "indegraph/audit.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "indegraph/closed_forms.hpp"
#include "indegraph/errors.hpp"
#include "indegraph/paper_claims.hpp"

namespace indegraph {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view label;
  std::string_view gloss;
};

constexpr std::array<TheoremInfo, kAllTheorems.size()> kTheoremInfo = {{
    {TheoremId::kL2_5, "L2.5", "|S_n| = 1 for odd n, 2 for even n"},
    {TheoremId::kL2_6, "L2.6", "|N_n| = n - phi(n) - 1 (n even), n - phi(n) - 2 (n odd)"},
    {TheoremId::kL2_6Swapped, "L2.6-swapped", "|N_n| with the parity cases exchanged"},
    {TheoremId::kT2_4, "T2.4", "connected"},
    {TheoremId::kT2_7, "T2.7", "deg = n-1 on S_n, n-phi(n) on U_n, phi(n)+2 or phi(n)+1 on N_n"},
    {TheoremId::kT2_10, "T2.10", "|E| = ((n-1)^2 [+1 if n even] - phi(n)(phi(n)-2)) / 2"},
    {TheoremId::kT2_12, "T2.12", "never complete for n > 2"},
    {TheoremId::kC2_13, "C2.13", "complete iff n = 2"},
    {TheoremId::kT2_14, "T2.14", "star K_{1,n-1} iff n prime"},
    {TheoremId::kT2_15, "T2.15", "girth 3 for composite n, infinite for prime n"},
    {TheoremId::kT2_16, "T2.16", "diameter at most 2"},
    {TheoremId::kT2_17, "T2.17", "Hamiltonian for composite n >= 4"},
    {TheoremId::kR2_18, "R2.18", "not Hamiltonian iff n in {2, 3}"},
    {TheoremId::kT3_1, "T3.1", "bipartite for prime n"},
    {TheoremId::kT3_2, "T3.2", "not bipartite for composite n"},
    {TheoremId::kT3_3, "T3.3", "complete d(n)-partite"},
    {TheoremId::kC3_4, "C3.4", "complete 4-partite for n = pq"},
    {TheoremId::kT4_1, "T4.1", "omega = (n - phi(n)(phi(n)-2) + |S_n|) / 2 for n > 2"},
    {TheoremId::kT4_3, "T4.3", "chi = (3n - 3 phi(n) + |S_n|) / 2 for n > 2"},
    {TheoremId::kT4_4, "T4.4", "chi != omega (\"strongly perfect\") for n > 2"},
}};

const TheoremInfo& info(TheoremId id) {
  return kTheoremInfo[static_cast<std::size_t>(id)];
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// One order class as the audit sees it: a representative vertex and the
// degree observed for it. In oracle mode every vertex is its own entry.
struct DegreeObservation {
  Residue vertex;
  std::uint64_t order;
  std::uint64_t degree;
};

// Everything the verdicts compare against, for one n.
struct GroundTruth {
  std::uint64_t n = 0;
  bool available = false;  // graph-level invariants known
  GroundTruthMode mode = GroundTruthMode::kOracle;

  std::uint64_t involutions = 0;
  std::uint64_t neither = 0;
  bool partition_overlap = false;
  std::vector<DegreeObservation> degrees;
  InvariantSet inv;
  bool complete_multipartite = false;
  bool star = false;

  GroundTruthMode np_mode = GroundTruthMode::kOracle;
  std::optional<std::uint64_t> clique;
  std::optional<std::uint64_t> chromatic;
  GroundTruthMode ham_mode = GroundTruthMode::kOracle;
  std::optional<bool> hamiltonian;
  std::optional<std::vector<Residue>> cycle;
};

bool is_star_centred_at_zero(std::uint64_t n, const std::vector<DegreeObservation>& degrees) {
  for (const auto& d : degrees) {
    const std::uint64_t want = d.vertex == 0 ? n - 1 : 1;
    if (d.degree != want) return false;
  }
  return true;
}

void fill_closed_form(GroundTruth& gt, Modulus n) {
  const DivisorTable table(n);
  gt.mode = GroundTruthMode::kClosedForm;
  gt.available = true;
  gt.inv = cf_invariants(table);
  gt.complete_multipartite = true;
  gt.involutions = 0;
  for (std::size_t i = 0; i < table.divisors().size(); ++i) {
    const std::uint64_t d = table.divisors()[i];
    const std::uint64_t phi = table.phis()[i];
    if (d <= 2) gt.involutions += phi;
    // n / d (mod n) is the smallest residue of order d.
    gt.degrees.push_back({(n.value() / d) % n.value(), d, n.value() - phi});
  }
  std::sort(gt.degrees.begin(), gt.degrees.end(),
            [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  gt.partition_overlap = n.value() == 2;
  const std::uint64_t units = table.phi_n();
  const std::uint64_t covered = gt.involutions + units - (gt.partition_overlap ? 1 : 0);
  gt.neither = n.value() - covered;
  gt.star = is_star_centred_at_zero(n.value(), gt.degrees);
}

GroundTruth gather(Modulus n, const AuditConfig& config) {
  GroundTruth gt;
  gt.n = n.value();
  const auto& limits = config.limits;
  if (n.value() <= limits.build_limit) {
    const auto g = IndependentGraph::build(n, limits.build_limit);
    gt.available = true;
    gt.mode = GroundTruthMode::kOracle;
    gt.inv = oracle_invariants(g, limits);
    const auto sets = special_sets(n);
    gt.involutions = sets.involutions.size();
    gt.neither = sets.neither.size();
    gt.partition_overlap = sets.overlap;
    for (Residue a = 0; a < n.value(); ++a) {
      gt.degrees.push_back({a, element_order(a, n), degree(g, a)});
    }
    gt.complete_multipartite = verify_complete_multipartite(g, order_decomposition(n));
    gt.star = is_star_centred_at_zero(n.value(), gt.degrees);
    gt.clique = gt.inv.clique_number;
    gt.chromatic = gt.inv.chromatic_number;
    if (n.value() <= limits.hamiltonian_limit) {
      gt.cycle = find_hamiltonian_cycle(g, limits.hamiltonian_limit);
      gt.hamiltonian = gt.cycle.has_value();
    }
  } else if (config.closed_form_fallback) {
    fill_closed_form(gt, n);
  }

  if (config.closed_form_fallback) {
    if (!gt.clique || !gt.chromatic) {
      gt.np_mode = GroundTruthMode::kClosedForm;
      gt.clique = gt.chromatic = cf_clique_chromatic(n);
    }
    if (!gt.hamiltonian) {
      gt.ham_mode = GroundTruthMode::kClosedForm;
      gt.hamiltonian = cf_is_hamiltonian(n);
    }
  }
  return gt;
}

class VerdictBuilder {
 public:
  VerdictBuilder(const GroundTruth& gt) : gt_(gt) {}

  TheoremVerdict not_applicable(TheoremId id, std::string why) const {
    TheoremVerdict v = base(id, gt_.mode);
    v.status = VerdictStatus::kNotApplicable;
    v.witness = std::move(why);
    return v;
  }

  TheoremVerdict skipped(TheoremId id, std::string claimed, GroundTruthMode mode) const {
    TheoremVerdict v = base(id, mode);
    v.status = VerdictStatus::kSkippedOracleLimit;
    v.claimed = std::move(claimed);
    v.witness = "ground truth beyond oracle limits and closed-form fallback disabled";
    return v;
  }

  TheoremVerdict compare(TheoremId id, GroundTruthMode mode, std::string claimed,
                         std::string observed, bool holds, std::string witness_if_fail,
                         std::optional<std::string> witness_if_hold = std::nullopt) const {
    TheoremVerdict v = base(id, mode);
    v.claimed = std::move(claimed);
    v.observed = std::move(observed);
    v.status = holds ? VerdictStatus::kMatch : VerdictStatus::kMismatch;
    v.witness = holds ? std::move(witness_if_hold) : std::optional(std::move(witness_if_fail));
    return v;
  }

 private:
  TheoremVerdict base(TheoremId id, GroundTruthMode mode) const {
    TheoremVerdict v;
    v.theorem = id;
    v.n = gt_.n;
    v.ground_truth = mode;
    return v;
  }

  const GroundTruth& gt_;
};

std::string join_degrees(const std::set<std::uint64_t, std::greater<>>& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += '|';
    out += std::to_string(v);
  }
  return out;
}

TheoremVerdict audit_degrees(const VerdictBuilder& vb, const GroundTruth& gt, Modulus n) {
  const char* tags[] = {"S", "U", "N"};
  std::array<std::optional<DegreeClaim>, 3> claims;
  std::array<std::set<std::uint64_t, std::greater<>>, 3> observed;
  std::optional<std::string> first_bad;
  for (const auto& d : gt.degrees) {
    const auto cls = static_cast<std::size_t>(classify(d.vertex, n));
    const DegreeClaim claim = pc_degree(d.vertex, n);
    claims[cls] = claim;
    observed[cls].insert(d.degree);
    if (!first_bad && !claim.admits(d.degree)) {
      first_bad = "vertex " + std::to_string(d.vertex) + " (order " + std::to_string(d.order) +
                  ") has degree " + std::to_string(d.degree) + ", claimed " + claim.to_string();
    }
  }
  std::string claimed, seen;
  for (std::size_t c = 0; c < 3; ++c) {
    if (!claims[c]) continue;
    if (!claimed.empty()) {
      claimed += ';';
      seen += ';';
    }
    claimed += std::string(tags[c]) + "=" + claims[c]->to_string();
    seen += std::string(tags[c]) + "=" + join_degrees(observed[c]);
  }
  return vb.compare(TheoremId::kT2_7, gt.mode, claimed, seen, !first_bad, first_bad.value_or(""));
}

std::string cycle_str(const std::vector<Residue>& cycle) {
  std::string out;
  for (auto v : cycle) {
    out += std::to_string(v);
    out += '-';
  }
  out += std::to_string(cycle.front());
  return out;
}

std::string hamiltonian_witness(const GroundTruth& gt, bool holds_claimed) {
  if (gt.ham_mode == GroundTruthMode::kClosedForm) {
    const std::uint64_t phi = euler_phi(gt.n);
    return holds_claimed ? "largest order class has phi(n) = " + std::to_string(phi) +
                               " > n/2 vertices; no Hamiltonian cycle"
                         : "largest order class has phi(n) = " + std::to_string(phi) +
                               " <= n/2 vertices; Hamiltonian";
  }
  if (gt.cycle) return "cycle " + cycle_str(*gt.cycle);
  return "exhaustive search from vertex 0 found no Hamiltonian cycle";
}

// Reason a statement does not apply to n, if any. Checked before ground truth
// availability so hypotheses are reported even past the oracle limits.
std::optional<std::string> inapplicable(TheoremId id, Modulus n, bool prime,
                                        const AuditConfig& config) {
  const std::uint64_t m = n.value();
  const bool overlap = m == 2;
  const char* overlap_note =
      "n = 2: residue 1 is both a unit and an involution, so U_n, S_n, N_n do not partition Z_n";
  switch (id) {
    case TheoremId::kL2_6:
      if (!config.printed_neither_reading) return "reading disabled by configuration";
      if (overlap) return overlap_note;
      break;
    case TheoremId::kL2_6Swapped:
      if (!config.swapped_neither_reading) return "reading disabled by configuration";
      if (overlap) return overlap_note;
      break;
    case TheoremId::kT2_7:
    case TheoremId::kT2_10:
      if (overlap) return overlap_note;
      break;
    case TheoremId::kT2_12:
      if (m <= 2) return "stated for n > 2";
      break;
    case TheoremId::kT2_17:
      if (prime || m < 4) return "stated for composite n >= 4";
      break;
    case TheoremId::kT3_1:
      if (!prime) return "stated for prime n";
      break;
    case TheoremId::kT3_2:
      if (prime) return "stated for composite n";
      break;
    case TheoremId::kC3_4: {
      const auto f = factorize(m);
      if (!(f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1)) {
        return "stated for n = pq with distinct primes p, q";
      }
      break;
    }
    case TheoremId::kT4_1:
    case TheoremId::kT4_3:
    case TheoremId::kT4_4:
      if (m < 3) return "stated for n > 2";
      break;
    default:
      break;
  }
  return std::nullopt;
}

TheoremVerdict audit_one(TheoremId id, const VerdictBuilder& vb, const GroundTruth& gt,
                         Modulus n, const AuditConfig& config) {
  const std::uint64_t m = n.value();
  const bool prime = is_prime(m);
  const StructuralClaims claims = pc_structural_claims(n);
  if (auto why = inapplicable(id, n, prime, config)) return vb.not_applicable(id, *why);
  const bool graph_level = id != TheoremId::kT4_1 && id != TheoremId::kT4_3 &&
                           id != TheoremId::kT4_4 && id != TheoremId::kT2_17 &&
                           id != TheoremId::kR2_18;
  if (graph_level && !gt.available) return vb.skipped(id, "", GroundTruthMode::kOracle);

  switch (id) {
    case TheoremId::kL2_5: {
      const auto claimed = pc_involution_count(n);
      return vb.compare(id, gt.mode, std::to_string(claimed), std::to_string(gt.involutions),
                        static_cast<std::uint64_t>(claimed) == gt.involutions,
                        "S_n has " + std::to_string(gt.involutions) + " elements");
    }
    case TheoremId::kL2_6:
    case TheoremId::kL2_6Swapped: {
      const bool printed = id == TheoremId::kL2_6;
      const auto claimed =
          pc_neither_count(n, printed ? NeitherReading::kPrinted : NeitherReading::kSwapped);
      const auto truth = static_cast<std::int64_t>(gt.neither);
      return vb.compare(id, gt.mode, std::to_string(claimed), std::to_string(truth),
                        claimed == truth,
                        "N_n has " + std::to_string(truth) + " elements (n - phi(n) - |S_n| = " +
                            std::to_string(m) + " - " + std::to_string(euler_phi(m)) + " - " +
                            std::to_string(gt.involutions) + ")");
    }
    case TheoremId::kT2_4:
      return vb.compare(id, gt.mode, bool_str(claims.connected), bool_str(gt.inv.connected),
                        claims.connected == gt.inv.connected,
                        "breadth-first search from 0 does not reach every vertex");
    case TheoremId::kT2_7:
      return audit_degrees(vb, gt, n);
    case TheoremId::kT2_10: {
      const HalfInteger claimed = pc_edge_count(n);
      const bool holds = claimed.is_integral() &&
                         claimed.twice / 2 == static_cast<std::int64_t>(gt.inv.edge_count);
      return vb.compare(id, gt.mode, claimed.to_string(), std::to_string(gt.inv.edge_count),
                        holds,
                        "edge totals: formula " + claimed.to_string() + ", graph " +
                            std::to_string(gt.inv.edge_count));
    }
    case TheoremId::kT2_12:
      return vb.compare(id, gt.mode, bool_str(false), bool_str(gt.inv.complete), !gt.inv.complete,
                        "every pair of vertices is adjacent");
    case TheoremId::kC2_13:
      return vb.compare(id, gt.mode, bool_str(claims.complete), bool_str(gt.inv.complete),
                        claims.complete == gt.inv.complete,
                        "edge count " + std::to_string(gt.inv.edge_count) + " vs n(n-1)/2 = " +
                            std::to_string(m * (m - 1) / 2));
    case TheoremId::kT2_14:
      return vb.compare(id, gt.mode, bool_str(claims.star), bool_str(gt.star),
                        claims.star == gt.star,
                        gt.star ? "degree sequence is {n-1, 1, ..., 1} with centre 0 but n is composite"
                                : "degree sequence differs from {n-1, 1, ..., 1}");
    case TheoremId::kT2_15:
      return vb.compare(id, gt.mode, claims.girth.to_string(), gt.inv.girth.to_string(),
                        claims.girth == gt.inv.girth,
                        "shortest cycle has length " + gt.inv.girth.to_string());
    case TheoremId::kT2_16: {
      const bool holds =
          !gt.inv.diameter.is_infinite() && gt.inv.diameter.value() <= claims.diameter_bound;
      return vb.compare(id, gt.mode, "<=" + std::to_string(claims.diameter_bound),
                        gt.inv.diameter.to_string(), holds,
                        "some pair of vertices is at distance " + gt.inv.diameter.to_string());
    }
    case TheoremId::kT2_17: {
      if (!gt.hamiltonian) return vb.skipped(id, bool_str(true), gt.ham_mode);
      return vb.compare(id, gt.ham_mode, bool_str(true), bool_str(*gt.hamiltonian),
                        *gt.hamiltonian, hamiltonian_witness(gt, true),
                        hamiltonian_witness(gt, false));
    }
    case TheoremId::kR2_18: {
      const bool claimed = !(m == 2 || m == 3);
      if (!gt.hamiltonian) return vb.skipped(id, bool_str(claimed), gt.ham_mode);
      std::string witness = hamiltonian_witness(gt, claimed);
      if (prime && m >= 5) witness += "; read as an iff, which asserts Hamiltonicity for primes";
      return vb.compare(id, gt.ham_mode, bool_str(claimed), bool_str(*gt.hamiltonian),
                        claimed == *gt.hamiltonian, witness);
    }
    case TheoremId::kT3_1:
      return vb.compare(id, gt.mode, bool_str(true), bool_str(gt.inv.bipartite), gt.inv.bipartite,
                        "odd cycle present");
    case TheoremId::kT3_2:
      return vb.compare(id, gt.mode, bool_str(false), bool_str(gt.inv.bipartite),
                        !gt.inv.bipartite, "a proper two-colouring exists");
    case TheoremId::kT3_3:
    case TheoremId::kC3_4: {
      const std::uint64_t claimed = id == TheoremId::kC3_4 ? 4 : claims.partite_count;
      const std::string observed =
          gt.complete_multipartite
              ? "complete " + std::to_string(gt.inv.partite_count) + "-partite"
              : "not complete multipartite";
      const bool holds = gt.complete_multipartite && gt.inv.partite_count == claimed;
      return vb.compare(id, gt.mode, "complete " + std::to_string(claimed) + "-partite", observed,
                        holds,
                        gt.complete_multipartite
                            ? std::to_string(gt.inv.partite_count) + " parts"
                            : "adjacency differs from the order-class partition");
    }
    case TheoremId::kT4_1:
    case TheoremId::kT4_3: {
      const bool clique = id == TheoremId::kT4_1;
      const std::int64_t claimed = clique ? pc_clique(n) : pc_chromatic(n);
      const auto& truth = clique ? gt.clique : gt.chromatic;
      if (!truth) return vb.skipped(id, std::to_string(claimed), gt.np_mode);
      const bool holds = claimed >= 0 && static_cast<std::uint64_t>(claimed) == *truth;
      const std::string what = clique ? "maximum clique" : "minimum colouring";
      return vb.compare(id, gt.np_mode, std::to_string(claimed), std::to_string(*truth), holds,
                        what + " has size " + std::to_string(*truth) +
                            (gt.np_mode == GroundTruthMode::kOracle ? " (exact search)"
                                                                    : " (d(n) parts)"));
    }
    case TheoremId::kT4_4: {
      const PerfectVerdict claimed = pc_perfect_verdict(n);
      if (!gt.clique || !gt.chromatic) {
        return vb.skipped(id, std::string(to_string(claimed)), gt.np_mode);
      }
      const PerfectVerdict observed = perfect_verdict_for(*gt.clique, *gt.chromatic);
      const std::string note = "omega = " + std::to_string(*gt.clique) +
                               ", chi = " + std::to_string(*gt.chromatic) +
                               "; claimed label from the clique/chromatic formulas; "
                               "'weakly perfect' here means chi = omega, reversed from "
                               "standard terminology";
      return vb.compare(id, gt.np_mode, std::string(to_string(claimed)),
                        std::string(to_string(observed)), claimed == observed, note, note);
    }
  }
  throw std::logic_error("unhandled theorem id");
}

}  // namespace

std::string_view to_string(TheoremId id) { return info(id).label; }

std::string_view statement_gloss(TheoremId id) { return info(id).gloss; }

TheoremId parse_theorem_id(std::string_view label) {
  for (const auto& t : kTheoremInfo) {
    if (t.label == label) return t.id;
  }
  throw std::invalid_argument("unknown theorem id: " + std::string(label));
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kMatch:
      return "MATCH";
    case VerdictStatus::kMismatch:
      return "MISMATCH";
    case VerdictStatus::kNotApplicable:
      return "NOT_APPLICABLE";
    case VerdictStatus::kSkippedOracleLimit:
      return "SKIPPED_ORACLE_LIMIT";
  }
  return "?";
}

std::string_view to_string(GroundTruthMode m) {
  return m == GroundTruthMode::kOracle ? "ORACLE" : "CLOSED_FORM";
}

VerdictStatus parse_verdict_status(std::string_view s) {
  for (auto st : {VerdictStatus::kMatch, VerdictStatus::kMismatch, VerdictStatus::kNotApplicable,
                  VerdictStatus::kSkippedOracleLimit}) {
    if (to_string(st) == s) return st;
  }
  throw std::invalid_argument("unknown verdict status: " + std::string(s));
}

GroundTruthMode parse_ground_truth_mode(std::string_view s) {
  if (s == "ORACLE") return GroundTruthMode::kOracle;
  if (s == "CLOSED_FORM") return GroundTruthMode::kClosedForm;
  throw std::invalid_argument("unknown ground truth mode: " + std::string(s));
}

std::vector<TheoremVerdict> audit_n(Modulus n, const AuditConfig& config) {
  const GroundTruth gt = gather(n, config);
  const VerdictBuilder vb(gt);
  std::vector<TheoremVerdict> out;
  out.reserve(kAllTheorems.size());
  for (TheoremId id : kAllTheorems) out.push_back(audit_one(id, vb, gt, n, config));
  return out;
}

std::map<TheoremId, TheoremSummary> summarize(const std::vector<NAudit>& results) {
  std::map<TheoremId, TheoremSummary> summary;
  for (TheoremId id : kAllTheorems) summary[id];
  for (const auto& r : results) {
    for (const auto& v : r.verdicts) {
      auto& s = summary[v.theorem];
      switch (v.status) {
        case VerdictStatus::kMatch:
          ++s.holds;
          break;
        case VerdictStatus::kMismatch:
          ++s.fails;
          if (!s.first_counterexample || v.n < *s.first_counterexample) {
            s.first_counterexample = v.n;
          }
          break;
        case VerdictStatus::kNotApplicable:
          ++s.not_applicable;
          break;
        case VerdictStatus::kSkippedOracleLimit:
          ++s.skipped;
          break;
      }
    }
  }
  return summary;
}

std::uint64_t SweepReport::count_mode(GroundTruthMode mode) const {
  std::uint64_t count = 0;
  for (const auto& r : results) {
    for (const auto& v : r.verdicts) {
      if (v.theorem == TheoremId::kT2_4) {
        if (v.ground_truth == mode && v.status != VerdictStatus::kSkippedOracleLimit) ++count;
        break;
      }
    }
  }
  return count;
}

SweepReport sweep(std::uint64_t lo, std::uint64_t hi, const AuditConfig& config, unsigned jobs) {
  if (lo < 2 || lo > hi) {
    throw std::invalid_argument("sweep range must satisfy 2 <= lo <= hi, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  SweepReport report;
  report.lo = lo;
  report.hi = hi;
  report.config = config;
  const std::uint64_t count = hi - lo + 1;
  report.results.resize(count);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      try {
        const std::uint64_t n = lo + i;
        report.results[i] = NAudit{n, audit_n(Modulus(n), config)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, count));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  report.summary = summarize(report.results);
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

using ojson = nlohmann::ordered_json;

ojson config_json(const AuditConfig& c) {
  ojson j;
  j["oracle_build_limit"] = c.limits.build_limit;
  j["exact_search_limit"] = c.limits.exact_search_limit;
  j["hamiltonian_limit"] = c.limits.hamiltonian_limit;
  j["neither_readings"] = ojson::array();
  if (c.printed_neither_reading) j["neither_readings"].push_back("printed");
  if (c.swapped_neither_reading) j["neither_readings"].push_back("swapped");
  j["closed_form_fallback"] = c.closed_form_fallback;
  return j;
}

std::string render_json(const SweepReport& r) {
  ojson root;
  root["range"] = ojson::array({r.lo, r.hi});
  root["config"] = config_json(r.config);
  root["results"] = ojson::array();
  for (const auto& res : r.results) {
    ojson entry;
    entry["n"] = res.n;
    entry["verdicts"] = ojson::array();
    for (const auto& v : res.verdicts) {
      ojson jv;
      jv["theorem"] = to_string(v.theorem);
      jv["status"] = to_string(v.status);
      jv["claimed"] = v.claimed;
      jv["observed"] = v.observed;
      jv["witness"] = v.witness ? ojson(*v.witness) : ojson(nullptr);
      jv["ground_truth"] = to_string(v.ground_truth);
      entry["verdicts"].push_back(std::move(jv));
    }
    root["results"].push_back(std::move(entry));
  }
  ojson summary = ojson::object();
  for (const auto& [id, s] : r.summary) {
    ojson js;
    js["holds"] = s.holds;
    js["fails"] = s.fails;
    js["first_counterexample"] =
        s.first_counterexample ? ojson(*s.first_counterexample) : ojson(nullptr);
    summary[std::string(to_string(id))] = std::move(js);
  }
  root["summary"] = std::move(summary);
  return root.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const SweepReport& r) {
  std::ostringstream out;
  out << "n,theorem,status,claimed,observed\n";
  for (const auto& res : r.results) {
    for (const auto& v : res.verdicts) {
      out << v.n << ',' << to_string(v.theorem) << ',' << to_string(v.status) << ','
          << csv_field(v.claimed) << ',' << csv_field(v.observed) << '\n';
    }
  }
  return out.str();
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render_markdown(const SweepReport& r) {
  std::ostringstream out;
  out << "# Independent graph audit, n in [" << r.lo << ", " << r.hi << "]\n\n";
  out << "Ground truth: " << r.count_mode(GroundTruthMode::kOracle) << " n by explicit graph, "
      << r.count_mode(GroundTruthMode::kClosedForm) << " n by validated closed forms "
      << "(limits: build " << r.config.limits.build_limit << ", clique/colouring "
      << r.config.limits.exact_search_limit << ", Hamiltonian "
      << r.config.limits.hamiltonian_limit << ").\n\n";
  out << "| Theorem | Statement | Verdict | Holds | Fails | Skipped | N/A | First counterexample |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& [id, s] : r.summary) {
    std::string_view verdict = s.fails > 0 ? "REFUTED" : s.holds > 0 ? "HOLDS" : "UNTESTED";
    out << "| " << to_string(id) << " | " << md_cell(statement_gloss(id)) << " | " << verdict
        << " | " << s.holds << " | " << s.fails << " | " << s.skipped << " | "
        << s.not_applicable << " | "
        << (s.first_counterexample ? std::to_string(*s.first_counterexample) : "-") << " |\n";
  }
  out << "\nNotes:\n\n"
      << "- L2.6 is audited as printed and with its parity cases swapped; the edge-count "
         "derivation uses the swapped form.\n"
      << "- R2.18 is read as an iff; under that reading every prime n >= 5 (a star) is a "
         "counterexample.\n"
      << "- T4.4 uses \"weakly perfect\" for chi = omega and \"strongly perfect\" otherwise, "
         "reversed from standard terminology; the claimed label comes from the T4.1/T4.3 "
         "formulas.\n"
      << "- n = 2 is NOT_APPLICABLE for statements that rely on U_n, S_n, N_n partitioning "
         "Z_n (there 1 is both a unit and an involution).\n";
  return out.str();
}

template <typename T>
T get_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
  return j.at(key).get<T>();
}

}  // namespace

std::string render_report(const SweepReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kMarkdown:
      return render_markdown(report);
    case ReportFormat::kJson:
      return render_json(report);
    case ReportFormat::kCsv:
      return render_csv(report);
  }
  throw std::invalid_argument("unknown report format");
}

SweepReport parse_report_json(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
    SweepReport r;
    const auto range = root.at("range");
    r.lo = range.at(0).get<std::uint64_t>();
    r.hi = range.at(1).get<std::uint64_t>();
    const auto& c = root.at("config");
    r.config.limits.build_limit = get_field<std::uint64_t>(c, "oracle_build_limit");
    r.config.limits.exact_search_limit = get_field<std::uint64_t>(c, "exact_search_limit");
    r.config.limits.hamiltonian_limit = get_field<std::uint64_t>(c, "hamiltonian_limit");
    r.config.printed_neither_reading = false;
    r.config.swapped_neither_reading = false;
    for (const auto& reading : c.at("neither_readings")) {
      const auto s = reading.get<std::string>();
      if (s == "printed") r.config.printed_neither_reading = true;
      else if (s == "swapped") r.config.swapped_neither_reading = true;
      else throw std::invalid_argument("unknown reading: " + s);
    }
    r.config.closed_form_fallback = get_field<bool>(c, "closed_form_fallback");
    for (const auto& entry : root.at("results")) {
      NAudit res;
      res.n = get_field<std::uint64_t>(entry, "n");
      for (const auto& jv : entry.at("verdicts")) {
        TheoremVerdict v;
        v.n = res.n;
        v.theorem = parse_theorem_id(get_field<std::string>(jv, "theorem"));
        v.status = parse_verdict_status(get_field<std::string>(jv, "status"));
        v.claimed = get_field<std::string>(jv, "claimed");
        v.observed = get_field<std::string>(jv, "observed");
        if (!jv.at("witness").is_null()) v.witness = jv.at("witness").get<std::string>();
        v.ground_truth = parse_ground_truth_mode(get_field<std::string>(jv, "ground_truth"));
        res.verdicts.push_back(std::move(v));
      }
      r.results.push_back(std::move(res));
    }
    r.summary = summarize(r.results);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace indegraph
