#include "indegraph/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace indegraph {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("product " + std::to_string(a) + " * " + std::to_string(b) +
                              " overflows 64 bits");
  }
  return out;
}

bool hamiltonian_criterion(std::uint64_t n, std::uint64_t phi_n) {
  return n >= 3 && 2 * phi_n <= n;
}

}  // namespace

DivisorTable::DivisorTable(Modulus n) : n_(n), factors_(factorize(n.value())) {
  divisors_ = indegraph::divisors(factors_);
  phis_.reserve(divisors_.size());
  // phi(d) from the restricted factorization; avoids refactoring every divisor.
  for (std::uint64_t d : divisors_) {
    std::uint64_t phi = 1;
    std::uint64_t rest = d;
    for (const auto& [p, e] : factors_) {
      if (rest % p != 0) continue;
      rest /= p;
      phi *= p - 1;
      while (rest % p == 0) {
        rest /= p;
        phi *= p;
      }
    }
    phis_.push_back(phi);
  }
}

PartSizeProfile cf_part_sizes(Modulus n) {
  const DivisorTable table(n);
  PartSizeProfile profile{n.value(), table.phis()};
  std::sort(profile.sizes.begin(), profile.sizes.end());
  return profile;
}

std::uint64_t cf_degree(Residue a, Modulus n) {
  return n.value() - euler_phi(element_order(a, n));
}

std::uint64_t cf_edge_count(const DivisorTable& table) {
  const std::uint64_t n = table.modulus().value();
  std::uint64_t same_part = 0;
  for (std::uint64_t phi : table.phis()) same_part += checked_mul(phi, phi);
  return (checked_mul(n, n) - same_part) / 2;
}

std::uint64_t cf_edge_count(Modulus n) { return cf_edge_count(DivisorTable(n)); }

ExtendedLength cf_girth(Modulus n) {
  return is_prime(n.value()) ? ExtendedLength::infinite() : ExtendedLength::finite(3);
}

ExtendedLength cf_diameter(Modulus n) {
  return ExtendedLength::finite(n.value() == 2 ? 1 : 2);
}

std::uint64_t cf_clique_chromatic(Modulus n) { return divisors(n.value()).size(); }

bool cf_is_hamiltonian(Modulus n) {
  return hamiltonian_criterion(n.value(), euler_phi(n.value()));
}

bool cf_is_bipartite(Modulus n) { return is_prime(n.value()); }

bool cf_is_complete(Modulus n) { return n.value() == 2; }

std::vector<DegreeRun> cf_degree_sequence(const DivisorTable& table) {
  const std::uint64_t n = table.modulus().value();
  std::map<std::uint64_t, std::uint64_t, std::greater<>> runs;
  for (std::uint64_t phi : table.phis()) runs[n - phi] += phi;
  std::vector<DegreeRun> out;
  out.reserve(runs.size());
  for (const auto& [deg, count] : runs) out.push_back({deg, count});
  return out;
}

InvariantSet cf_invariants(const DivisorTable& table) {
  const std::uint64_t n = table.modulus().value();
  const bool prime = table.n_is_prime();
  InvariantSet inv;
  inv.n = n;
  inv.edge_count = cf_edge_count(table);
  inv.degree_sequence = cf_degree_sequence(table);
  inv.connected = true;
  inv.girth = prime ? ExtendedLength::infinite() : ExtendedLength::finite(3);
  inv.diameter = cf_diameter(table.modulus());
  inv.bipartite = prime;
  inv.complete = n == 2;
  inv.partite_count = table.divisors().size();
  inv.clique_number = inv.partite_count;
  inv.chromatic_number = inv.partite_count;
  inv.hamiltonian = hamiltonian_criterion(n, table.phi_n());
  return inv;
}

InvariantSet cf_invariants(Modulus n) { return cf_invariants(DivisorTable(n)); }

}  // namespace indegraph
