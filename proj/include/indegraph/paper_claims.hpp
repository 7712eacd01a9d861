#pragma once

// Claimed values of the audited statements about the independent graph,
// evaluated literally. Nothing here is corrected; the audit compares these
// values with ground truth and closed_forms.hpp holds the validated versions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indegraph/invariants.hpp"
#include "indegraph/zn_core.hpp"

namespace indegraph {

/// |S_n| as stated: 1 for odd n, 2 for even n.
std::int64_t pc_involution_count(Modulus n);

/// Two readings of the |N_n| lemma. kPrinted: n - phi(n) - 1 for even n and
/// n - phi(n) - 2 for odd n. kSwapped exchanges the cases, which is how the
/// edge-count proof uses the lemma.
enum class NeitherReading { kPrinted, kSwapped };

std::int64_t pc_neither_count(Modulus n, NeitherReading reading = NeitherReading::kPrinted);

struct DegreeClaim {
  enum class Kind { kExact, kEitherOf };
  Kind kind = Kind::kExact;
  /// One value for kExact, two distinct values for kEitherOf.
  std::vector<std::int64_t> values;

  bool admits(std::uint64_t degree) const;
  /// "5" or "7|6".
  std::string to_string() const;
  friend bool operator==(const DegreeClaim&, const DegreeClaim&) = default;
};

/// Vertex degree as stated: n - 1 on S_n, n - phi(n) on U_n, and
/// "phi(n) + 2 or phi(n) + 1" on N_n. Classes follow `classify`.
DegreeClaim pc_degree(Residue a, Modulus n);

/// Exact value of k / 2 for integer k; the printed edge formula is not
/// integral at n = 2.
struct HalfInteger {
  std::int64_t twice = 0;
  bool is_integral() const noexcept { return twice % 2 == 0; }
  /// "37", "-1" or "3/2".
  std::string to_string() const;
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

/// Edge-count formula: ((n-1)^2 - phi(n)(phi(n)-2)) / 2 for odd n and
/// ((n-1)^2 + 1 - phi(n)(phi(n)-2)) / 2 for even n.
HalfInteger pc_edge_count(Modulus n);

/// (n - phi(n)(phi(n)-2) + |S_n|) / 2 with the stated |S_n|. Not clamped;
/// may be zero or negative. Throws NotApplicable for n < 3.
std::int64_t pc_clique(Modulus n);

/// (3n - 3 phi(n) + |S_n|) / 2. Throws NotApplicable for n < 3.
std::int64_t pc_chromatic(Modulus n);

/// "Weakly perfect" means chi == omega and "strongly perfect" otherwise, as
/// used by the audited statements; standard terminology differs.
enum class PerfectVerdict { kWeaklyPerfect, kStronglyPerfect };

std::string to_string(PerfectVerdict v);

/// Applies that definition to pc_clique and pc_chromatic.
/// Throws NotApplicable for n < 3.
PerfectVerdict pc_perfect_verdict(Modulus n);

/// Same definition applied to arbitrary clique / chromatic values.
PerfectVerdict perfect_verdict_for(std::uint64_t clique, std::uint64_t chromatic);

struct StructuralClaims {
  bool connected = true;
  bool complete = false;
  bool star = false;
  ExtendedLength girth = ExtendedLength::infinite();
  std::uint64_t diameter_bound = 2;
  bool bipartite = false;
  std::uint64_t partite_count = 0;
  /// Absent for primes >= 5: no statement covers them.
  std::optional<bool> hamiltonian;
};

StructuralClaims pc_structural_claims(Modulus n);

}  // namespace indegraph
