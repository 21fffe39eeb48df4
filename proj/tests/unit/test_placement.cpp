#include <doctest.h>

#include "codedcache/combinatorics.hpp"
#include "codedcache/errors.hpp"
#include "codedcache/placement.hpp"
#include "support.hpp"

using namespace codedcache;

TEST_CASE("single-group placement") {
  const MnCache c = mn_placement(5, 2, 4);
  CHECK(c.packet_sets().size() == 10);
  for (int k = 0; k < 5; ++k) {
    CHECK(c.fraction(k) == Rational(2, 5));
    CHECK(c.cached(k).size() == 4 * 4);
  }
  CHECK(c.holds(1, PacketId{3, UserSet::of({1, 4})}));
  CHECK_FALSE(c.holds(0, PacketId{3, UserSet::of({1, 4})}));

  const MnCache shifted = mn_placement(3, 1, 2, 4);
  CHECK(shifted.packet_sets().front() == UserSet::of({4}));
  CHECK(shifted.holds(5, PacketId{0, UserSet::of({5})}));

  const MnCache full = mn_placement(3, 3, 2);
  CHECK(full.fraction(0) == Rational(1));

  CHECK_THROWS_AS(mn_placement(3, 0, 2), RangeError);
  CHECK_THROWS_AS(mn_placement(3, 4, 2), RangeError);
  CHECK_THROWS_AS(mn_placement(3, 1, 0), RangeError);
}

TEST_CASE("two-stage placement meets the memory constraint exactly") {
  for (int n : {3, 7}) {
    for (const auto& cfg : testsupport::grid(2, 5, 2, 4, n)) {
      const SubPacketUniverse u(cfg);
      const CacheContents cache = concat_placement(cfg);
      CHECK(cache.fixed_caches_untouched());
      for (int k = 0; k < cfg.users(); ++k) {
        // brute-force count over the first file
        std::uint64_t held = 0;
        for (std::uint64_t j = 0; j < u.per_file(); ++j) held += cache.holds(k, u.id_at(j));
        CHECK(held == cache.cached_per_file(k, u));
        const Rational frac = cache_fraction(cache, k, u);
        CHECK(frac * cfg.files() == (k < cfg.k1() ? cfg.m1() : cfg.m2()));
      }
    }
  }
}

TEST_CASE("cache enumeration agrees with membership") {
  const auto cfg = validate_config(4, 3, 3, 2, 2);
  const SubPacketUniverse u(cfg);
  const CacheContents cache = concat_placement(cfg);
  for (int k = 0; k < cfg.users(); ++k) {
    const auto list = cache.cached(k, u);
    CHECK(list.size() == cache.cached_per_file(k, u) * 2);
    for (const auto& id : list) CHECK(cache.holds(k, id));
    CHECK(std::is_sorted(list.begin(), list.end(),
                         [&](const SubPacketId& a, const SubPacketId& b) { return u.ordinal(a) < u.ordinal(b); }));
  }
}

TEST_CASE("fixed users keep whole packets, mobile users never do") {
  const auto cfg = validate_config(4, 3, 3, 2, 7);
  const CacheContents cache = concat_placement(cfg);
  const PacketId p{2, UserSet::of({0, 1, 3})};
  CHECK(cache.holds_packet(0, p));
  CHECK_FALSE(cache.holds_packet(2, p));
  for (int k = 4; k < 7; ++k) CHECK_FALSE(cache.holds_packet(k, p));
  // user 1 and the stage-1 cache agree on every packet
  for (UserSet a : enumerate_user_sets(0, 4, 3))
    CHECK(cache.holds_packet(1, PacketId{0, a}) == cache.fixed_stage().holds(1, PacketId{0, a}));
}
