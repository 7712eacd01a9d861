#pragma once

// Explicit construction of the independent graph of Z_n and brute-force
// invariant computation. Nothing in here relies on the order-class structure
// of the graph: every routine works on the adjacency relation alone, so the
// results can serve as ground truth for the closed forms.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "indegraph/invariants.hpp"
#include "indegraph/zn_core.hpp"

namespace indegraph {

struct OracleLimits {
  std::uint64_t build_limit = 20000;
  std::uint64_t exact_search_limit = 64;
  std::uint64_t hamiltonian_limit = 24;
};

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

class IndependentGraph {
 public:
  /// Two distinct residues are adjacent iff their additive orders differ.
  /// Throws CapacityError when n exceeds `build_limit`.
  static IndependentGraph build(Modulus n, std::uint64_t build_limit = OracleLimits{}.build_limit);

  Modulus modulus() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return rows_.size(); }

  bool adjacent(std::size_t a, std::size_t b) const { return rows_.at(a).test(b); }
  const VertexSet& neighbors(std::size_t a) const { return rows_.at(a); }

 private:
  IndependentGraph(Modulus n, std::vector<VertexSet> rows) : n_(n), rows_(std::move(rows)) {}

  Modulus n_;
  std::vector<VertexSet> rows_;
};

/// Throws std::out_of_range for a vertex outside [0, n).
std::uint64_t degree(const IndependentGraph& g, Residue a);
std::uint64_t edge_count(const IndependentGraph& g);
bool is_connected(const IndependentGraph& g);
ExtendedLength girth(const IndependentGraph& g);
ExtendedLength diameter(const IndependentGraph& g);
bool is_bipartite(const IndependentGraph& g);
/// The graph has every possible edge.
bool is_complete(const IndependentGraph& g);

/// Exact maximum clique by branch and bound with greedy-colouring bounds.
/// Throws CapacityError when n exceeds `limit`.
std::uint64_t clique_number(const IndependentGraph& g,
                            std::uint64_t limit = OracleLimits{}.exact_search_limit);

/// Exact chromatic number: tries k = clique number, k + 1, ... until a
/// backtracking k-colouring succeeds. Throws CapacityError past `limit`.
std::uint64_t chromatic_number(const IndependentGraph& g,
                               std::uint64_t limit = OracleLimits{}.exact_search_limit);

/// Backtracking search for a Hamiltonian cycle, memoizing dead
/// (visited set, endpoint) states. The returned cycle starts at 0 and its second
/// vertex is smaller than its last. Absent for n < 3 or when none exists.
/// Throws CapacityError past `limit`.
std::optional<std::vector<Residue>> find_hamiltonian_cycle(
    const IndependentGraph& g, std::uint64_t limit = OracleLimits{}.hamiltonian_limit);

/// True iff `cycle` visits every vertex exactly once along graph edges.
bool is_hamiltonian_cycle(const IndependentGraph& g, const std::vector<Residue>& cycle);

/// True iff two distinct vertices are adjacent exactly when they lie in
/// different classes of `decomposition`. Throws std::invalid_argument on a
/// modulus mismatch.
bool verify_complete_multipartite(const IndependentGraph& g,
                                  const OrderDecomposition& decomposition);

/// Every invariant computed on the explicit graph. NP-hard fields are left
/// empty when n is above their limits.
InvariantSet oracle_invariants(const IndependentGraph& g, const OracleLimits& limits = {});

}  // namespace indegraph
