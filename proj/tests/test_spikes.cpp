#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace connfn;
using namespace connfn::testing;

namespace {

std::vector<SpikyTable> all_spiky_n3() {
  // Symmetric assignments: one value in {1,2,3} per complement pair of the
  // 8 transversals, filtered by the adjacency clause.
  std::vector<SpikyTable> out;
  std::vector<tword_t> pairs{0b000, 0b001, 0b010, 0b100};
  std::vector<int> choice(4, 0);
  for (int total = 0; total < 81; ++total) {
    int code = total;
    SpikyTable t;
    t.n = 3;
    t.transversal_values.assign(8, 3);
    for (int i = 0; i < 4; ++i) {
      int v = 1 + code % 3;
      code /= 3;
      t.transversal_values[pairs[i]] = v;
      t.transversal_values[pairs[i] ^ 0b111] = v;
    }
    if (is_spiky(t)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_CASE("transversal words and masks") {
  CHECK(is_transversal_mask(0b010101, 3));   // all-x
  CHECK_FALSE(is_transversal_mask(0b110100, 3));
  CHECK_FALSE(is_transversal_mask(0b01, 3));
  CHECK(mask_from_word(0b000, 3) == 0b010101);
  CHECK(mask_from_word(0b111, 3) == 0b101010);
  CHECK(word_from_mask(0b011001, 3) == tword_t{2});
  CHECK_FALSE(word_from_mask(0b011000, 3).has_value());
}

TEST_CASE("independent set validation") {
  CHECK_NOTHROW(make_independent_set(3, {0b000, 0b011}));
  CHECK_THROWS_AS(make_independent_set(3, {0b000, 0b001}), std::invalid_argument);
}

TEST_CASE("spike rank cases") {
  SpikeGround sg = make_spike_ground(3);
  IndependentSet empty = make_independent_set(3, {});
  // No leg included, disjoint from a leg: rank = |X|.
  CHECK(spike_rank(empty, bit(sg.x_index(1))) == 1);
  // Legs included, one missed: rank = l(X) + 1.
  CHECK(spike_rank(empty, sg.leg(1) | sg.leg(2)) == 3);
  // Leg included, all met: rank = n.
  CHECK(spike_rank(empty, sg.leg(1) | bit(sg.x_index(2)) | bit(sg.x_index(3))) == 3);
  // Transversal: n-1 inside I, n outside.
  IndependentSet with_t = make_independent_set(3, {0b000});
  CHECK(spike_rank(with_t, mask_from_word(0b000, 3)) == 2);
  CHECK(spike_rank(with_t, mask_from_word(0b011, 3)) == 3);
}

TEST_CASE("spike mu") {
  SpikeGround sg = make_spike_ground(3);
  IndependentSet empty = make_independent_set(3, {});
  CHECK(spike_mu(empty, sg.leg(1)) == 2);
  CHECK(spike_mu(empty, 0) == 0);
  IndependentSet with_t = make_independent_set(3, {0b000});
  CHECK(spike_mu(with_t, mask_from_word(0b000, 3)) == 2);
  // Transversal formula n - |I cap {X, E-X}| across all words.
  std::mt19937_64 rng(3);
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      IndependentSet I = random_independent_set(n, rng);
      const tword_t full = (tword_t{1} << n) - 1;
      for (tword_t w = 0; w <= full; ++w) {
        int members = (I.contains(w) ? 1 : 0) + (I.contains(w ^ full) ? 1 : 0);
        CHECK(spike_mu(I, mask_from_word(w, n)) == n - members);
      }
    }
  }
}

TEST_CASE("spike circuit families") {
  IndependentSet empty = make_independent_set(3, {});
  CHECK(spike_circuits(empty).circuits.size() == 15);  // 3 leg pairs + 12
  IndependentSet with_t = make_independent_set(3, {0b000});
  CHECK(spike_circuits(with_t).circuits.size() == 13);  // 3 + 1 + 9
  CHECK(rank_from_circuits(spike_circuits(empty)).rank == spike_rank_table(empty).rank);
  IndependentSet bogus{3, {0b000, 0b001}};
  CHECK_THROWS_AS(spike_circuits(bogus), std::invalid_argument);
}

TEST_CASE("lambda_n") {
  SpikeGround sg = make_spike_ground(3);
  CHECK(lambda_n(3, sg.leg(1)) == 2);
  CHECK(lambda_n(3, bit(sg.x_index(1))) == 1);
  CHECK_THROWS_AS(lambda_n(3, mask_from_word(0b000, 3)), std::domain_error);
  // lambda_n agrees with mu of every spike off the transversals.
  for (const IndependentSet& I : all_independent_sets_h3()) {
    for (mask_t x = 0; x < (mask_t{1} << 6); ++x) {
      if (is_transversal_mask(x, 3)) continue;
      CHECK(lambda_n(3, x) == spike_mu(I, x));
    }
  }
}

TEST_CASE("is_spiky") {
  IndependentSet empty = make_independent_set(3, {});
  SpikyTable base = spike_mu_table(empty);
  for (int v : base.transversal_values) CHECK(v == 3);
  CHECK(is_spiky(base));

  SpikyTable out_of_range = base;
  out_of_range.transversal_values[0b000] = 0;  // n-3
  out_of_range.transversal_values[0b111] = 0;
  CHECK_FALSE(is_spiky(out_of_range));

  SpikyTable bad_neighbours = base;
  bad_neighbours.transversal_values[0b000] = 1;  // n-2
  bad_neighbours.transversal_values[0b111] = 1;
  bad_neighbours.transversal_values[0b001] = 2;  // adjacent, sum 3 < 2n-2
  bad_neighbours.transversal_values[0b110] = 2;
  CHECK_FALSE(is_spiky(bad_neighbours));

  SpikyTable asymmetric = base;
  asymmetric.transversal_values[0b000] = 2;
  CHECK_FALSE(is_spiky(asymmetric));
}

TEST_CASE("spiky_from_table round trip and rejection") {
  IndependentSet I = make_independent_set(3, {0b000});
  SetFunctionTable full = spike_mu_table(I).to_table();
  SpikyTable back = spiky_from_table(full);
  CHECK(back == spike_mu_table(I));

  full.values[0b000011] += 1;  // break the lambda_n extension on L_1
  CHECK_THROWS_AS(spiky_from_table(full), std::invalid_argument);
}

TEST_CASE("lambda_w") {
  SpikyTable t = lambda_w(4, {0b0000, 0b1111});
  CHECK(t.transversal_values[0b0000] == 3);
  CHECK(t.transversal_values[0b1111] == 3);
  CHECK(t.transversal_values[0b0001] == 4);
  CHECK(is_spiky(t));

  IndependentSet empty = make_independent_set(3, {});
  CHECK(lambda_w(3, {}) == spike_mu_table(empty));

  CHECK_THROWS_AS(lambda_w(4, {0b0000}), std::domain_error);
}

TEST_CASE("decide_matroidal on known instances") {
  SUBCASE("odd n is always matroidal") {
    for (const SpikyTable& t : all_spiky_n3()) {
      MatroidalVerdict v = decide_matroidal(t);
      CHECK(v.matroidal);
      REQUIRE(v.witness_independent.has_value());
      CHECK(spike_mu_table(*v.witness_independent) == t);
    }
  }
  SUBCASE("buffered-cycle closure is not matroidal") {
    BufferedPath p = build_buffered_path(2);
    std::vector<tword_t> w = p.steps;
    for (tword_t s : p.steps) w.push_back(s ^ tword_t{0b1111});
    MatroidalVerdict v = decide_matroidal(lambda_w(4, w));
    CHECK_FALSE(v.matroidal);
    REQUIRE(v.witness_transversal.has_value());
  }
  SUBCASE("two isolated complement vertices are matroidal") {
    MatroidalVerdict v = decide_matroidal(lambda_w(4, {0b0000, 0b1111}));
    CHECK(v.matroidal);
  }
  SUBCASE("non-spiky input is rejected") {
    SpikyTable bad;
    bad.n = 3;
    bad.transversal_values.assign(8, 0);
    CHECK_THROWS_AS(decide_matroidal(bad), std::invalid_argument);
  }
}

TEST_CASE("brute force agrees with the decision procedure") {
  SUBCASE("n=3 exhaustive") {
    for (const SpikyTable& t : all_spiky_n3()) {
      MatroidalVerdict fast = decide_matroidal(t);
      MatroidalVerdict slow = brute_force_matroidal(t);
      CHECK(fast.matroidal == slow.matroidal);
      if (slow.matroidal) {
        CHECK(spike_mu_table(*slow.witness_independent) == t);
      }
    }
  }
  SUBCASE("n=4 random spiky tables") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 120; ++i) {
      SpikyTable t = random_spiky(4, rng);
      MatroidalVerdict fast = decide_matroidal(t);
      MatroidalVerdict slow = brute_force_matroidal(t);
      CHECK(fast.matroidal == slow.matroidal);
      if (fast.matroidal) {
        CHECK(spike_mu_table(*fast.witness_independent) == t);
      }
    }
  }
  SUBCASE("the empty-I table is realized by the empty set") {
    IndependentSet empty = make_independent_set(3, {});
    MatroidalVerdict v = brute_force_matroidal(spike_mu_table(empty));
    REQUIRE(v.matroidal);
    CHECK(v.witness_independent->words.empty());
  }
  SUBCASE("capacity guard") {
    CHECK_THROWS_AS(brute_force_matroidal(lambda_w(5, {})), capacity_error);
  }
}

TEST_CASE("spiky functions are connectivity functions") {
  for (const SpikyTable& t : all_spiky_n3()) {
    CHECK(validate_connectivity(t.to_table()).valid());
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    CHECK(validate_connectivity(random_spiky(4, rng).to_table()).valid());
  }
  for (int i = 0; i < 20; ++i) {
    CHECK(validate_connectivity(random_spiky(5, rng).to_table()).valid());
  }
}

TEST_CASE("spike rank tables satisfy the rank axioms") {
  for (const IndependentSet& I : all_independent_sets_h3()) {
    CHECK(validate_rank_axioms(spike_rank_table(I)).valid());
  }
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    CHECK(validate_rank_axioms(spike_rank_table(random_independent_set(4, rng))).valid());
  }
}

TEST_CASE("matroidal witnesses satisfy the spike leg-rank profile") {
  std::mt19937_64 rng(31);
  for (int n : {3, 4}) {
    SpikeGround sg = n == 3 ? make_spike_ground(3) : make_spike_ground(4);
    for (int i = 0; i < 40; ++i) {
      SpikyTable t = random_spiky(n, rng);
      MatroidalVerdict v = decide_matroidal(t);
      if (!v.matroidal) continue;
      const IndependentSet& I = *v.witness_independent;
      mask_t legs = 0;
      for (int k = 1; k <= n; ++k) {
        legs |= sg.leg(k);
        int expected = k < n ? k + 1 : n;
        CHECK(spike_rank(I, legs) == expected);
      }
    }
  }
}

TEST_CASE("lambda of a leg plus a partial transversal is k+1") {
  std::mt19937_64 rng(37);
  for (int n : {3, 4}) {
    SpikeGround sg = make_spike_ground(n);
    for (int trial = 0; trial < 25; ++trial) {
      IndependentSet I = random_independent_set(n, rng);
      for (int k = 2; k <= n - 1; ++k) {
        mask_t x = sg.leg(1);
        for (int i = 2; i <= k; ++i) {
          x |= bit(rng() % 2 == 0 ? sg.x_index(i) : sg.y_index(i));
        }
        CHECK(spike_mu(I, x) == k + 1);
      }
    }
  }
}
