#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace connfn;
using namespace connfn::testing;

TEST_CASE("dual rank of U_{2,4}") {
  RankTable u24 = uniform_matroid(2, 4);
  CHECK(dual_rank(u24, 0b0001) == 1);  // 2 + 1 - 2
  CHECK(dual_rank(u24, 0) == 0);
  CHECK(dual_rank(u24, u24.ground.full_mask()) == 2);  // 0 + 4 - 2
}

TEST_CASE("mu and its dual-rank form agree") {
  RankTable u24 = uniform_matroid(2, 4);
  CHECK(matroid_mu(u24, 0b0001) == 1);
  CHECK(matroid_mu(u24, 0) == 0);
  CHECK(matroid_mu(u24, 0b0011) == 2);
  for (mask_t x = 0; x <= u24.ground.full_mask(); ++x) {
    long long via_dual = u24.value(x) + dual_rank(u24, x) - popcount(x);
    CHECK(matroid_mu(u24, x) == via_dual);
  }
}

TEST_CASE("rank axiom validation") {
  CHECK(validate_rank_axioms(uniform_matroid(2, 4)).valid());
  CHECK(validate_rank_axioms(uniform_matroid(4, 4)).valid());  // free matroid

  RankTable bad = uniform_matroid(2, 2);
  bad.rank[0b01] = 2;
  ValidationReport rep = validate_rank_axioms(bad);
  CHECK_FALSE(rep.valid());
  bool unit_flagged = false;
  for (const auto& v : rep.violations) unit_flagged |= (v.axiom == Axiom::unit_increase);
  CHECK(unit_flagged);
}

TEST_CASE("rank from circuits") {
  SUBCASE("one 3-element circuit") {
    CircuitFamily c{letters(3), {0b111}};
    RankTable r = rank_from_circuits(c);
    CHECK(r.value(0b111) == 2);
    CHECK(r.value(0b011) == 2);
    CHECK(validate_rank_axioms(r).valid());
  }
  SUBCASE("no circuits gives the free matroid") {
    CircuitFamily c{letters(3), {}};
    RankTable r = rank_from_circuits(c);
    for (mask_t x = 0; x <= r.ground.full_mask(); ++x) {
      CHECK(r.value(x) == popcount(x));
    }
  }
  SUBCASE("spike circuits reproduce the spike rank") {
    IndependentSet empty = make_independent_set(3, {});
    RankTable via_circuits = rank_from_circuits(spike_circuits(empty));
    RankTable direct = spike_rank_table(empty);
    CHECK(via_circuits.rank == direct.rank);
  }
  SUBCASE("a non-antichain family is rejected") {
    CircuitFamily c{letters(3), {0b011, 0b111}};
    CHECK_THROWS_AS(rank_from_circuits(c), std::invalid_argument);
  }
}

TEST_CASE("mu tables are connectivity functions") {
  CHECK(validate_connectivity(mu_table(uniform_matroid(2, 4))).valid());
  CHECK(validate_connectivity(mu_table(uniform_matroid(5, 5))).valid());
  for (const IndependentSet& I : all_independent_sets_h3()) {
    CHECK(validate_connectivity(mu_table(spike_rank_table(I))).valid());
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) {
    IndependentSet I = random_independent_set(4, rng);
    CHECK(validate_connectivity(mu_table(spike_rank_table(I))).valid());
  }
}

TEST_CASE("dual of dual is the rank function") {
  std::vector<RankTable> matroids;
  matroids.push_back(uniform_matroid(2, 4));
  matroids.push_back(uniform_matroid(3, 3));
  for (int n = 1; n <= 4; ++n) {
    for (RankTable& r : all_matroids(n)) matroids.push_back(std::move(r));
  }
  for (const RankTable& r : matroids) {
    CHECK(dual_rank_table(dual_rank_table(r)).rank == r.rank);
  }
}

TEST_CASE("enumerated matroids all pass the rank axioms") {
  long long count = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const RankTable& r : all_matroids(n)) {
      ++count;
      CHECK(validate_rank_axioms(r).valid());
      CHECK(validate_connectivity(mu_table(r)).valid());
    }
  }
  CHECK(count > 50);
}

TEST_CASE("spike circuits match the brute-force rank oracle on H_4 samples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    IndependentSet I = random_independent_set(4, rng);
    CHECK(rank_from_circuits(spike_circuits(I)).rank == spike_rank_table(I).rank);
  }
}
