#include <doctest.h>

#include "codedcache/combinatorics.hpp"
#include "codedcache/config.hpp"
#include "codedcache/errors.hpp"
#include "codedcache/subpacket.hpp"
#include "support.hpp"

using namespace codedcache;

TEST_CASE("cache sizes are exact rationals") {
  const auto cfg = validate_config(4, 3, 3, 2, 7);
  CHECK(cfg.m1() == Rational(21, 4));
  CHECK(cfg.m2() == Rational(14, 3));
  CHECK(to_string(cfg.m2()) == "14/3");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(cfg.users() == 7);
  CHECK(cfg.group_of(3) == Group::Fixed);
  CHECK(cfg.group_of(4) == Group::Mobile);
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(validate_config(4, 3, 4, 2, 7), RangeError);
  CHECK_THROWS_AS(validate_config(4, 3, 0, 2, 7), RangeError);
  CHECK_THROWS_AS(validate_config(4, 3, 3, 3, 7), RangeError);
  CHECK_THROWS_AS(validate_config(1, 3, 1, 1, 7), RangeError);
  CHECK_THROWS_AS(validate_config(4, 3, 3, 2, 0), RangeError);
  CHECK_THROWS_AS(validate_config(40, 30, 3, 2, 7), RangeError);
  CHECK_NOTHROW(validate_config(32, 32, 1, 1, 2));
  // fewer files than users is allowed
  CHECK_NOTHROW(validate_config(4, 3, 3, 2, 2));
}

TEST_CASE("analysis-only configurations skip the user-set limit") {
  CHECK_NOTHROW(validate_parameters(500, 100, 50, 30, 1000));
  CHECK_THROWS_AS(validate_parameters(500, 100, 500, 30, 1000), RangeError);
  CHECK_THROWS_AS(validate_parameters(1001, 100, 5, 3, 10), RangeError);
  CHECK_THROWS_AS(validate_config(500, 100, 50, 30, 1000), RangeError);
}

TEST_CASE("demand vectors") {
  const auto cfg = validate_config(4, 3, 3, 2, 5);
  const auto worst = DemandVector::worst_case(cfg);
  CHECK(std::vector<int>(worst.files().begin(), worst.files().end()) == std::vector<int>{0, 1, 2, 3, 4, 0, 1});
  const auto same = DemandVector::all_same(cfg, 2);
  for (int k = 0; k < 7; ++k) CHECK(same[k] == 2);
  CHECK_THROWS_AS(DemandVector(cfg, {0, 1, 2}), RangeError);
  CHECK_THROWS_AS(DemandVector(cfg, {0, 1, 2, 3, 4, 5, 0}), RangeError);
  CHECK_THROWS_AS(DemandVector(cfg, {0, 1, 2, 3, -1, 0, 0}), RangeError);
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ull);
  for (int n = 1; n < 20; ++n)
    for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("subset enumeration matches brute force, in lex order") {
  for (int count = 1; count <= 9; ++count) {
    for (int size = 0; size <= count; ++size) {
      const auto expect = testsupport::brute_subsets(3, count, size);
      const auto sets = enumerate_user_sets(3, count, size);
      REQUIRE(sets.size() == expect.size());
      std::vector<int> ground(count);
      for (int i = 0; i < count; ++i) ground[i] = 3 + i;
      const auto lists = enumerate_subsets(ground, size);
      for (std::size_t i = 0; i < sets.size(); ++i) {
        CHECK(sets[i].members() == expect[i]);
        CHECK(lists[i] == expect[i]);
        CHECK(lex_rank(sets[i], 3, count) == i);
        if (i > 0) CHECK(sets[i - 1] < sets[i]);
      }
    }
  }
  const std::vector<int> ground{0, 1, 2};
  CHECK_THROWS_AS(enumerate_subsets(ground, 4), RangeError);
  CHECK_THROWS_AS(enumerate_subsets(ground, -1), RangeError);
}

TEST_CASE("user set positions") {
  const auto s = UserSet::of({2, 5, 9});
  CHECK(s.nth(0) == 2);
  CHECK(s.nth(2) == 9);
  CHECK(s.position(9) == 2);
  CHECK(s.position(5) == 1);
  CHECK(s.without(5) == UserSet::of({2, 9}));
  CHECK(s.with(0).nth(0) == 0);
  CHECK(UserSet::of({2, 9}).subset_of(s));
  CHECK(to_string(s) == "{2,5,9}");
  CHECK_THROWS_AS(s.nth(3), RangeError);
  CHECK_THROWS_AS(UserSet::of({64}), RangeError);
  // lexicographic on sorted members, not numeric on masks
  CHECK(UserSet::of({0, 3}) < UserSet::of({1, 2}));
}

TEST_CASE("sub-packet ordinals round-trip") {
  for (const auto& cfg : testsupport::grid(2, 5, 2, 4, 3)) {
    const SubPacketUniverse u(cfg);
    CHECK(u.per_file() == std::uint64_t(cfg.t1() * cfg.t2()) * binomial(cfg.k1(), cfg.t1()) * binomial(cfg.k2(), cfg.t2()));
    std::uint64_t expect = 0;
    for (int n = 0; n < cfg.files(); ++n)
      for (UserSet a : u.a_sets())
        for (UserSet b : u.b_sets())
          for (int l1 = 0; l1 < cfg.t1(); ++l1)
            for (int l2 = 0; l2 < cfg.t2(); ++l2) {
              const SubPacketId id{n, a, b, l1, l2};
              REQUIRE(u.ordinal(id) == expect);
              REQUIRE(u.id_at(expect) == id);
              ++expect;
            }
    CHECK(expect == u.total());
  }
}

TEST_CASE("sub-packet count for K1=4 K2=3 t1=3 t2=2") {
  const SubPacketUniverse u(validate_config(4, 3, 3, 2, 7));
  CHECK(u.per_file() == 72);
  CHECK(u.a_sets().size() == 4);
  CHECK(u.b_sets().size() == 3);
  CHECK(u.group1() == UserSet::of({0, 1, 2, 3}));
  CHECK(u.group2() == UserSet::of({4, 5, 6}));
}
