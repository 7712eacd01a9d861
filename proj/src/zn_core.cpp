#include "indegraph/zn_core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace indegraph {

Modulus::Modulus(std::uint64_t n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(n));
  }
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel; p <= n / p avoids overflowing p * p.
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

std::uint64_t euler_phi(const std::vector<PrimePower>& factors) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  return euler_phi(factorize(n));
}

std::vector<std::uint64_t> divisors(const std::vector<PrimePower>& factors) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  return divisors(factorize(n));
}

std::uint64_t element_order(Residue a, Modulus n) {
  if (a >= n.value()) {
    throw std::out_of_range("residue " + std::to_string(a) + " not in [0, " +
                            std::to_string(n.value()) + ")");
  }
  return n.value() / std::gcd(a, n.value());
}

SpecialSets special_sets(Modulus n) {
  SpecialSets s;
  const std::uint64_t m = n.value();
  for (Residue a = 0; a < m; ++a) {
    const bool unit = std::gcd(a, m) == 1;
    const bool involution = (2 * a) % m == 0;
    if (unit) s.units.push_back(a);
    if (involution) s.involutions.push_back(a);
    if (unit && involution) s.overlap = true;
    if (!unit && !involution) s.neither.push_back(a);
  }
  return s;
}

ResidueClass classify(Residue a, Modulus n) {
  const std::uint64_t order = element_order(a, n);
  if (order <= 2) return ResidueClass::kInvolution;
  if (order == n.value()) return ResidueClass::kUnit;
  return ResidueClass::kNeither;
}

OrderDecomposition::OrderDecomposition(Modulus n) : n_(n) {
  const auto factors = factorize(n.value());
  for (std::uint64_t d : divisors(factors)) {
    classes_[d].reserve(euler_phi(d));
  }
  for (Residue a = 0; a < n.value(); ++a) {
    classes_[element_order(a, n)].push_back(a);
  }
}

const std::vector<Residue>& OrderDecomposition::of_order(std::uint64_t d) const {
  const auto it = classes_.find(d);
  if (it == classes_.end()) {
    throw std::out_of_range(std::to_string(d) + " does not divide " + std::to_string(n_.value()));
  }
  return it->second;
}

}  // namespace indegraph
