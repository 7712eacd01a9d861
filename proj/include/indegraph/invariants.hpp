#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace indegraph {

/// A path or cycle length that may be infinite (acyclic girth, disconnected diameter).
class ExtendedLength {
 public:
  static ExtendedLength infinite() { return ExtendedLength(); }
  static ExtendedLength finite(std::uint64_t v) { return ExtendedLength(v); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws std::bad_optional_access when infinite.
  std::uint64_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const ExtendedLength&, const ExtendedLength&) = default;

 private:
  ExtendedLength() = default;
  explicit ExtendedLength(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// `count` vertices of degree `degree`. Degree sequences are kept run-length
/// encoded, descending by degree, so closed forms never materialize n entries.
struct DegreeRun {
  std::uint64_t degree;
  std::uint64_t count;
  friend bool operator==(const DegreeRun&, const DegreeRun&) = default;
};

struct InvariantSet {
  std::uint64_t n = 0;
  std::uint64_t edge_count = 0;
  std::vector<DegreeRun> degree_sequence;
  bool connected = false;
  ExtendedLength girth = ExtendedLength::infinite();
  ExtendedLength diameter = ExtendedLength::infinite();
  bool bipartite = false;
  bool complete = false;
  std::optional<std::uint64_t> clique_number;
  std::optional<std::uint64_t> chromatic_number;
  std::optional<bool> hamiltonian;
  std::uint64_t partite_count = 0;

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

/// Sum of all degrees (handshake left-hand side).
std::uint64_t degree_sum(const std::vector<DegreeRun>& runs);

/// Run-length encode a per-vertex degree list into descending runs.
std::vector<DegreeRun> degree_runs(const std::vector<std::uint64_t>& degrees);

}  // namespace indegraph
