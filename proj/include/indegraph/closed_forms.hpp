#pragma once

// Invariants of the independent graph of Z_n computed from the order classes
// alone. The graph is complete multipartite with one part of size phi(d) for
// every divisor d of n, so everything reduces to divisor enumeration plus one
// factorization of n. No graph is ever built here.
//
// Products such as n^2 are exact for n < 2^32; larger n raise
// std::overflow_error instead of wrapping.

#include <cstdint>
#include <vector>

#include "indegraph/invariants.hpp"
#include "indegraph/zn_core.hpp"

namespace indegraph {

/// Divisors of n paired with phi of each, computed from one factorization.
class DivisorTable {
 public:
  explicit DivisorTable(Modulus n);

  Modulus modulus() const noexcept { return n_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  const std::vector<std::uint64_t>& divisors() const noexcept { return divisors_; }
  /// phi(d) for divisors()[i], same index.
  const std::vector<std::uint64_t>& phis() const noexcept { return phis_; }
  std::uint64_t phi_n() const noexcept { return phis_.back(); }
  bool n_is_prime() const noexcept { return divisors_.size() == 2; }

 private:
  Modulus n_;
  std::vector<PrimePower> factors_;
  std::vector<std::uint64_t> divisors_;
  std::vector<std::uint64_t> phis_;
};

struct PartSizeProfile {
  std::uint64_t n = 0;
  /// phi(d) over divisors d, ascending (a multiset).
  std::vector<std::uint64_t> sizes;
};

PartSizeProfile cf_part_sizes(Modulus n);

/// n - phi(o(a)). Throws std::out_of_range unless 0 <= a < n.
std::uint64_t cf_degree(Residue a, Modulus n);

/// (n^2 - sum_{d|n} phi(d)^2) / 2.
std::uint64_t cf_edge_count(Modulus n);
std::uint64_t cf_edge_count(const DivisorTable& table);

ExtendedLength cf_girth(Modulus n);
ExtendedLength cf_diameter(Modulus n);

/// Number of parts d(n); both the clique number and the chromatic number.
std::uint64_t cf_clique_chromatic(Modulus n);

/// Complete multipartite graph on >= 3 vertices is Hamiltonian iff its
/// largest part (phi(n)) is at most the sum of the others.
bool cf_is_hamiltonian(Modulus n);

bool cf_is_bipartite(Modulus n);
bool cf_is_complete(Modulus n);

/// Descending degree runs: every element of order d has degree n - phi(d).
std::vector<DegreeRun> cf_degree_sequence(const DivisorTable& table);

/// Every field populated, including the NP-hard ones.
InvariantSet cf_invariants(Modulus n);
InvariantSet cf_invariants(const DivisorTable& table);

}  // namespace indegraph
