#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "indegraph/closed_forms.hpp"
#include "indegraph/errors.hpp"
#include "indegraph/paper_claims.hpp"

using namespace indegraph;

TEST_CASE("involution count") {
  CHECK(pc_involution_count(Modulus(7)) == 1);
  CHECK(pc_involution_count(Modulus(10)) == 2);
  CHECK(pc_involution_count(Modulus(2)) == 2);
}

TEST_CASE("neither count, both readings") {
  CHECK(pc_neither_count(Modulus(6)) == 3);
  CHECK(pc_neither_count(Modulus(6), NeitherReading::kSwapped) == 2);
  CHECK(pc_neither_count(Modulus(9)) == 1);
  CHECK(pc_neither_count(Modulus(9), NeitherReading::kSwapped) == 2);
  CHECK(pc_neither_count(Modulus(3)) == -1);
  CHECK(pc_neither_count(Modulus(3), NeitherReading::kSwapped) == 0);
}

TEST_CASE("degree claims") {
  const Modulus six(6);
  CHECK(pc_degree(0, six).to_string() == "5");
  CHECK(pc_degree(3, six).to_string() == "5");
  CHECK(pc_degree(1, six).to_string() == "4");
  const auto neither = pc_degree(2, six);
  CHECK(neither.kind == DegreeClaim::Kind::kEitherOf);
  CHECK(neither.to_string() == "4|3");
  CHECK(neither.admits(4));
  CHECK(neither.admits(3));
  CHECK_FALSE(neither.admits(5));
}

TEST_CASE("edge count formula") {
  CHECK(pc_edge_count(Modulus(2)).to_string() == "3/2");
  CHECK_FALSE(pc_edge_count(Modulus(2)).is_integral());
  CHECK(pc_edge_count(Modulus(10)).to_string() == "37");
  for (std::uint64_t n = 3; n <= 9; ++n) {
    CAPTURE(n);
    const auto claim = pc_edge_count(Modulus(n));
    REQUIRE(claim.is_integral());
    CHECK(claim.twice / 2 == static_cast<std::int64_t>(cf_edge_count(Modulus(n))));
  }
  CHECK(pc_edge_count(Modulus(10)).twice / 2 != static_cast<std::int64_t>(cf_edge_count(Modulus(10))));
}

TEST_CASE("clique and chromatic formulas") {
  CHECK(pc_clique(Modulus(6)) == 4);
  CHECK(pc_chromatic(Modulus(6)) == 7);
  CHECK(pc_clique(Modulus(3)) == 2);
  CHECK(pc_chromatic(Modulus(3)) == 2);
  CHECK(pc_clique(Modulus(4)) == 3);
  CHECK(pc_chromatic(Modulus(4)) == 4);
  CHECK_THROWS_AS(pc_clique(Modulus(2)), NotApplicable);
  CHECK_THROWS_AS(pc_chromatic(Modulus(2)), NotApplicable);
  CHECK_THROWS_AS(pc_perfect_verdict(Modulus(2)), NotApplicable);
}

TEST_CASE("perfect verdicts") {
  CHECK(pc_perfect_verdict(Modulus(6)) == PerfectVerdict::kStronglyPerfect);
  CHECK(pc_perfect_verdict(Modulus(3)) == PerfectVerdict::kWeaklyPerfect);
  CHECK(pc_perfect_verdict(Modulus(4)) == PerfectVerdict::kStronglyPerfect);
  CHECK(perfect_verdict_for(4, 4) == PerfectVerdict::kWeaklyPerfect);
  CHECK(perfect_verdict_for(4, 7) == PerfectVerdict::kStronglyPerfect);
}

TEST_CASE("structural claims") {
  const auto c9 = pc_structural_claims(Modulus(9));
  CHECK(c9.hamiltonian == true);
  CHECK(c9.girth == ExtendedLength::finite(3));
  CHECK(c9.partite_count == 3);
  CHECK_FALSE(c9.star);

  const auto c7 = pc_structural_claims(Modulus(7));
  CHECK_FALSE(c7.hamiltonian.has_value());
  CHECK(c7.star);
  CHECK(c7.bipartite);
  CHECK(c7.girth.is_infinite());

  CHECK(pc_structural_claims(Modulus(3)).hamiltonian == false);
  CHECK(pc_structural_claims(Modulus(2)).complete);
}
