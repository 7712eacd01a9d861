#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "indegraph/zn_core.hpp"
#include "support/brute_force.hpp"

using namespace indegraph;

TEST_CASE("modulus rejects n < 2") {
  CHECK_THROWS_AS(Modulus(0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
  CHECK(Modulus(2).value() == 2);
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1000000007) == std::vector<PrimePower>{{1000000007, 1}});
  CHECK(factorize(std::uint64_t{1} << 30) == std::vector<PrimePower>{{2, 30}});
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t product = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(brute::is_prime(p));
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    CHECK(product == n);
  }
}

TEST_CASE("euler_phi examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK_THROWS_AS(euler_phi(std::uint64_t{0}), std::invalid_argument);
}

TEST_CASE("euler_phi matches scanning reference") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    CAPTURE(n);
    CHECK(euler_phi(n) == brute::phi(n));
  }
}

TEST_CASE("divisors examples") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(6) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  for (std::uint64_t n = 1; n <= 1000; ++n) CHECK(divisors(n) == brute::divisors(n));
}

TEST_CASE("element_order examples and errors") {
  for (std::uint64_t n = 2; n <= 20; ++n) CHECK(element_order(0, Modulus(n)) == 1);
  CHECK(element_order(3, Modulus(6)) == 2);
  CHECK(element_order(8, Modulus(12)) == 3);
  CHECK_THROWS_AS(element_order(6, Modulus(6)), std::out_of_range);
  CHECK_THROWS_AS(element_order(100, Modulus(6)), std::out_of_range);
}

TEST_CASE("element_order agrees with repeated addition, divides n, is inverse-invariant") {
  for (std::uint64_t n = 2; n <= 300; ++n) {
    const Modulus m(n);
    for (Residue a = 0; a < n; ++a) {
      const auto o = element_order(a, m);
      CHECK(o == brute::order(a, n));
      CHECK(n % o == 0);
      CHECK(o == element_order((n - a) % n, m));
    }
  }
}

TEST_CASE("special_sets examples") {
  const auto s6 = special_sets(Modulus(6));
  CHECK(s6.units == std::vector<Residue>{1, 5});
  CHECK(s6.involutions == std::vector<Residue>{0, 3});
  CHECK(s6.neither == std::vector<Residue>{2, 4});
  CHECK_FALSE(s6.overlap);

  const auto s3 = special_sets(Modulus(3));
  CHECK(s3.units == std::vector<Residue>{1, 2});
  CHECK(s3.involutions == std::vector<Residue>{0});
  CHECK(s3.neither.empty());
  CHECK_FALSE(s3.overlap);

  const auto s2 = special_sets(Modulus(2));
  CHECK(s2.units == std::vector<Residue>{1});
  CHECK(s2.involutions == std::vector<Residue>{0, 1});
  CHECK(s2.neither.empty());
  CHECK(s2.overlap);
}

TEST_CASE("special sets partition Z_n for n >= 3") {
  for (std::uint64_t n = 3; n <= 1000; ++n) {
    const auto s = special_sets(Modulus(n));
    CHECK_FALSE(s.overlap);
    std::set<Residue> all;
    all.insert(s.units.begin(), s.units.end());
    all.insert(s.involutions.begin(), s.involutions.end());
    all.insert(s.neither.begin(), s.neither.end());
    CHECK(s.units.size() + s.involutions.size() + s.neither.size() == n);
    CHECK(all.size() == n);
    CHECK(s.units.size() == brute::phi(n));
  }
}

TEST_CASE("classify puts order <= 2 first") {
  CHECK(classify(1, Modulus(2)) == ResidueClass::kInvolution);
  CHECK(classify(0, Modulus(7)) == ResidueClass::kInvolution);
  CHECK(classify(3, Modulus(6)) == ResidueClass::kInvolution);
  CHECK(classify(5, Modulus(6)) == ResidueClass::kUnit);
  CHECK(classify(4, Modulus(6)) == ResidueClass::kNeither);
}

TEST_CASE("order_decomposition examples") {
  using Classes = std::map<std::uint64_t, std::vector<Residue>>;
  CHECK(order_decomposition(Modulus(6)).classes() ==
        Classes{{1, {0}}, {2, {3}}, {3, {2, 4}}, {6, {1, 5}}});
  CHECK(order_decomposition(Modulus(5)).classes() == Classes{{1, {0}}, {5, {1, 2, 3, 4}}});
  CHECK(order_decomposition(Modulus(4)).classes() == Classes{{1, {0}}, {2, {2}}, {4, {1, 3}}});
  CHECK_THROWS_AS(order_decomposition(Modulus(6)).of_order(4), std::out_of_range);
}

TEST_CASE("order classes: sizes phi(d), disjoint cover, Gauss identity, largest is phi(n)") {
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    CAPTURE(n);
    const auto dec = order_decomposition(Modulus(n));
    CHECK(dec.part_count() == brute::divisors(n).size());
    std::vector<bool> seen(n, false);
    std::uint64_t total = 0, largest = 0;
    for (const auto& [d, members] : dec.classes()) {
      CHECK(members.size() == euler_phi(d));
      CHECK(std::is_sorted(members.begin(), members.end()));
      for (auto a : members) {
        CHECK_FALSE(seen[a]);
        seen[a] = true;
      }
      total += euler_phi(d);
      largest = std::max(largest, euler_phi(d));
    }
    CHECK(total == n);
    CHECK(largest == euler_phi(n));
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}
