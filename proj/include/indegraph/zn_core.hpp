#pragma once

// Number theory for the additive group Z_n: totient, divisors, element
// orders and the partition of Z_n into order classes.

#include <cstdint>
#include <map>
#include <vector>

namespace indegraph {

using Residue = std::uint64_t;

/// Order of the cyclic group Z_n. Always n >= 2.
class Modulus {
 public:
  /// Throws std::invalid_argument for n < 2.
  explicit Modulus(std::uint64_t n);

  std::uint64_t value() const noexcept { return n_; }
  friend bool operator==(Modulus, Modulus) = default;

 private:
  std::uint64_t n_;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const std::vector<PrimePower>& factors);

/// All positive divisors, strictly increasing.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const std::vector<PrimePower>& factors);

/// n / gcd(a, n). Throws std::out_of_range unless 0 <= a < n.
std::uint64_t element_order(Residue a, Modulus n);

/// U_n, S_n and N_n as ascending residue lists.
///
/// At n = 2 the residue 1 is both a unit and an involution; `overlap` records
/// that and `neither` is computed as Z_n minus the union either way.
struct SpecialSets {
  std::vector<Residue> units;
  std::vector<Residue> involutions;
  std::vector<Residue> neither;
  bool overlap = false;
};

SpecialSets special_sets(Modulus n);

/// Which of U_n / S_n / N_n a residue is assigned to when a single label is
/// needed. Order <= 2 wins over unit, so at n = 2 the residue 1 is an involution.
enum class ResidueClass { kInvolution, kUnit, kNeither };

ResidueClass classify(Residue a, Modulus n);

/// Partition of Z_n by additive order: divisor d -> ascending residues of order d.
class OrderDecomposition {
 public:
  explicit OrderDecomposition(Modulus n);

  Modulus modulus() const noexcept { return n_; }
  const std::map<std::uint64_t, std::vector<Residue>>& classes() const noexcept {
    return classes_;
  }
  /// Throws std::out_of_range if d does not divide n.
  const std::vector<Residue>& of_order(std::uint64_t d) const;
  std::size_t part_count() const noexcept { return classes_.size(); }

 private:
  Modulus n_;
  std::map<std::uint64_t, std::vector<Residue>> classes_;
};

inline OrderDecomposition order_decomposition(Modulus n) { return OrderDecomposition(n); }

}  // namespace indegraph
