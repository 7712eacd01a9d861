#include "indegraph/paper_claims.hpp"

#include "indegraph/errors.hpp"

namespace indegraph {

namespace {

std::int64_t phi_of(Modulus n) { return static_cast<std::int64_t>(euler_phi(n.value())); }

std::int64_t signed_n(Modulus n) { return static_cast<std::int64_t>(n.value()); }

void require_above_two(Modulus n, const char* what) {
  if (n.value() < 3) {
    throw NotApplicable(std::string(what) + " is stated only for n > 2, got n = " +
                        std::to_string(n.value()));
  }
}

}  // namespace

std::int64_t pc_involution_count(Modulus n) { return n.value() % 2 == 0 ? 2 : 1; }

std::int64_t pc_neither_count(Modulus n, NeitherReading reading) {
  const bool even = n.value() % 2 == 0;
  const bool minus_one = reading == NeitherReading::kPrinted ? even : !even;
  return signed_n(n) - phi_of(n) - (minus_one ? 1 : 2);
}

bool DegreeClaim::admits(std::uint64_t degree) const {
  for (std::int64_t v : values) {
    if (v >= 0 && static_cast<std::uint64_t>(v) == degree) return true;
  }
  return false;
}

std::string DegreeClaim::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += '|';
    out += std::to_string(values[i]);
  }
  return out;
}

DegreeClaim pc_degree(Residue a, Modulus n) {
  const std::int64_t m = signed_n(n);
  const std::int64_t phi = phi_of(n);
  switch (classify(a, n)) {
    case ResidueClass::kInvolution:
      return {DegreeClaim::Kind::kExact, {m - 1}};
    case ResidueClass::kUnit:
      return {DegreeClaim::Kind::kExact, {m - phi}};
    case ResidueClass::kNeither:
      break;
  }
  return {DegreeClaim::Kind::kEitherOf, {phi + 2, phi + 1}};
}

std::string HalfInteger::to_string() const {
  if (is_integral()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInteger pc_edge_count(Modulus n) {
  const std::int64_t m = signed_n(n);
  const std::int64_t phi = phi_of(n);
  std::int64_t twice = (m - 1) * (m - 1) - phi * (phi - 2);
  if (m % 2 == 0) twice += 1;
  return {twice};
}

std::int64_t pc_clique(Modulus n) {
  require_above_two(n, "clique formula");
  const std::int64_t phi = phi_of(n);
  return (signed_n(n) - phi * (phi - 2) + pc_involution_count(n)) / 2;
}

std::int64_t pc_chromatic(Modulus n) {
  require_above_two(n, "chromatic formula");
  return (3 * signed_n(n) - 3 * phi_of(n) + pc_involution_count(n)) / 2;
}

std::string to_string(PerfectVerdict v) {
  return v == PerfectVerdict::kWeaklyPerfect ? "WEAKLY_PERFECT" : "STRONGLY_PERFECT";
}

PerfectVerdict perfect_verdict_for(std::uint64_t clique, std::uint64_t chromatic) {
  return clique == chromatic ? PerfectVerdict::kWeaklyPerfect : PerfectVerdict::kStronglyPerfect;
}

PerfectVerdict pc_perfect_verdict(Modulus n) {
  require_above_two(n, "perfectness theorem");
  return pc_chromatic(n) == pc_clique(n) ? PerfectVerdict::kWeaklyPerfect
                                         : PerfectVerdict::kStronglyPerfect;
}

StructuralClaims pc_structural_claims(Modulus n) {
  const std::uint64_t m = n.value();
  const bool prime = is_prime(m);
  StructuralClaims c;
  c.connected = true;
  c.complete = m == 2;
  c.star = prime;
  c.girth = prime ? ExtendedLength::infinite() : ExtendedLength::finite(3);
  c.diameter_bound = 2;
  c.bipartite = prime;
  c.partite_count = divisors(m).size();
  if (m == 2 || m == 3) {
    c.hamiltonian = false;
  } else if (!prime) {
    c.hamiltonian = true;
  }
  return c;
}

}  // namespace indegraph
