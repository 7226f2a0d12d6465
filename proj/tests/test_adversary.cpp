#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "connfn/adversary.hpp"

using namespace connfn;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("v_partition sizes") {
  VPartition vp = v_partition(2);
  CHECK(vp.middle.size() == 6);  // C(4,2)
  CHECK(vp.below.size() == 5);   // C(4,0) + C(4,1)
  CHECK(vp.above.size() == 5);
  CHECK(vp.below.size() + vp.middle.size() + vp.above.size() == 16);
  for (int m = 1; m <= 4; ++m) {
    VPartition p = v_partition(m);
    CHECK(p.below.size() + p.middle.size() + p.above.size() ==
          (std::size_t{1} << (2 * m)));
    CHECK(static_cast<long long>(p.middle.size()) == binomial(2 * m, m));
  }
}

TEST_CASE("matroidal adversary") {
  SUBCASE("two queries below threshold get fooled") {
    std::vector<mask_t> queries{mask_from_word(0b0011, 4), 0b10100101};
    AdversaryTranscript tr = adversary_matroidal(2, queries);
    CHECK(tr.fooled);
    CHECK(tr.base_matroidal);
    REQUIRE(tr.alternative_matroidal.has_value());
    CHECK_FALSE(*tr.alternative_matroidal);
    CHECK(tr.agreement_certified);
    for (const AdversaryQuery& q : tr.queries) {
      REQUIRE(q.alt_value.has_value());
      CHECK(q.base_value == *q.alt_value);
    }
  }
  SUBCASE("no queries at all get fooled") {
    AdversaryTranscript tr = adversary_matroidal(2, {});
    CHECK(tr.fooled);
  }
  SUBCASE("querying every middle transversal blocks the adversary") {
    VPartition vp = v_partition(2);
    std::vector<mask_t> queries;
    for (tword_t w : vp.middle) queries.push_back(mask_from_word(w, 4));
    AdversaryTranscript tr = adversary_matroidal(2, queries);
    CHECK_FALSE(tr.fooled);
    CHECK_FALSE(tr.alternative.has_value());
  }
  SUBCASE("non-transversal queries are marked inert") {
    AdversaryTranscript tr = adversary_matroidal(2, {0b1, mask_from_word(0b0101, 4)});
    REQUIRE(tr.queries.size() == 2);
    CHECK(tr.queries[0].inert);
    CHECK_FALSE(tr.queries[1].inert);
  }
}

TEST_CASE("nonmatroidal adversary") {
  SUBCASE("one query below threshold gets fooled") {
    AdversaryTranscript tr = adversary_nonmatroidal(2, {mask_from_word(0b0000, 4)});
    CHECK(tr.fooled);
    CHECK_FALSE(tr.base_matroidal);
    REQUIRE(tr.alternative_matroidal.has_value());
    CHECK(*tr.alternative_matroidal);
    CHECK(tr.agreement_certified);
  }
  SUBCASE("two queries below the m=3 threshold get fooled") {
    std::vector<mask_t> queries{mask_from_word(0b000000, 6),
                                mask_from_word(0b111000, 6)};
    AdversaryTranscript tr = adversary_nonmatroidal(3, queries);
    CHECK(tr.fooled);  // f(3)/2 = 3
  }
  SUBCASE("covering every pair of W blocks the adversary") {
    BufferedPath p = build_buffered_path(2);
    std::vector<mask_t> queries;
    for (tword_t s : p.steps) queries.push_back(mask_from_word(s, 4));
    AdversaryTranscript tr = adversary_nonmatroidal(2, queries);
    CHECK_FALSE(tr.fooled);
  }
}

TEST_CASE("fooled transcripts always certify agreement and flip the verdict") {
  std::mt19937_64 rng(41);
  for (int m : {2, 3}) {
    const int n = 2 * m;
    const mask_t full = (mask_t{1} << (2 * n)) - 1;
    for (int trial = 0; trial < 40; ++trial) {
      long long threshold = trial % 2 == 0 ? binomial(2 * m, m) / 2
                                           : buffered_path_length(m) / 2;
      std::size_t count = rng() % std::max<long long>(threshold, 1);
      std::vector<mask_t> queries;
      for (std::size_t i = 0; i < count; ++i) {
        if (rng() % 2 == 0) {
          queries.push_back(
              mask_from_word(static_cast<tword_t>(rng() & ((1u << n) - 1)), n));
        } else {
          queries.push_back(rng() & full);
        }
      }
      AdversaryTranscript tr = trial % 2 == 0 ? adversary_matroidal(m, queries)
                                              : adversary_nonmatroidal(m, queries);
      CHECK(tr.fooled);
      CHECK(tr.agreement_certified);
      REQUIRE(tr.alternative_matroidal.has_value());
      CHECK(tr.base_matroidal != *tr.alternative_matroidal);
      for (const AdversaryQuery& q : tr.queries) {
        CHECK(q.base_value == *q.alt_value);
        CHECK(q.inert == !is_transversal_mask(q.subset, n));
      }
    }
  }
}

TEST_CASE("threshold growth dominates fixed polynomial samples") {
  std::vector<long long> f_half, c_half;
  for (int m = 1; m <= 5; ++m) {
    f_half.push_back(buffered_path_length(m) / 2);
    c_half.push_back(binomial(2 * m, m) / 2);
  }
  CHECK(f_half == std::vector<long long>{1, 2, 3, 6, 11});
  CHECK(c_half == std::vector<long long>{1, 3, 10, 35, 126});
}
