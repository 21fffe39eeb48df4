#include <doctest.h>

#include <algorithm>
#include <random>

#include "codedcache/errors.hpp"
#include "codedcache/verifier.hpp"
#include "support.hpp"

using namespace codedcache;

TEST_CASE("every user decodes on the small grid, and the rank check agrees") {
  for (int n : {3, -1}) {
    for (const auto& cfg : testsupport::grid(2, 5, 2, 4, n)) {
      const SubPacketUniverse u(cfg);
      const CacheContents cache = concat_placement(cfg);
      const DeliveryPlan plan = build_csm_plan(u, DemandVector::worst_case(cfg));
      for (int k = 0; k < cfg.users(); ++k) {
        const DecodeResult r = peel(k, plan, u, cache);
        CHECK(r.complete());
        CHECK(r.decoded.size() == u.per_file() - cache.cached_per_file(k, u));
        const OracleResult o = gf2_oracle(k, plan, u, cache);
        CHECK(o.decodable);
        CHECK(o.equations == plan.messages.size());
      }
    }
  }
}

TEST_CASE("random demands with repeats still decode") {
  std::mt19937_64 rng(3);
  for (const auto& cfg : testsupport::grid(2, 4, 2, 4, 3)) {
    const SubPacketUniverse u(cfg);
    const CacheContents cache = concat_placement(cfg);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> d(cfg.users());
      for (int& x : d) x = int(rng() % 3);
      const DeliveryPlan plan = build_csm_plan(u, DemandVector(cfg, d));
      for (int k = 0; k < cfg.users(); ++k) CHECK_NOTHROW(peel_decode(k, plan, u, cache));
    }
  }
}

TEST_CASE("dropping any message breaks some user, and both decoders see it") {
  const auto cfg = validate_config(4, 3, 3, 2, 7);
  const SubPacketUniverse u(cfg);
  const CacheContents cache = concat_placement(cfg);
  const DeliveryPlan full = build_csm_plan(u, DemandVector::worst_case(cfg));
  for (std::size_t drop = 0; drop < full.messages.size(); ++drop) {
    DeliveryPlan p = full;
    p.messages.erase(p.messages.begin() + std::ptrdiff_t(drop));
    int broken = 0;
    for (int k = 0; k < cfg.users(); ++k) {
      const bool peeled = peel(k, p, u, cache).complete();
      CHECK(peeled == gf2_oracle(k, p, u, cache).decodable);
      broken += !peeled;
    }
    CHECK(broken > 0);
  }
  DeliveryPlan p = full;
  p.messages.erase(p.messages.begin());
  int victim = -1;
  for (int k = 0; k < cfg.users() && victim < 0; ++k)
    if (!peel(k, p, u, cache).complete()) victim = k;
  REQUIRE(victim >= 0);
  CHECK_THROWS_AS(peel_decode(victim, p, u, cache), DecodeFailure);
}

TEST_CASE("peeling resolves chains from the one cached tuple member") {
  // user 4 sees v24+v25, v25+v26 and knows the member that leaves it out
  const auto cfg = validate_config(4, 3, 3, 2, 7);
  const SubPacketUniverse u(cfg);
  const CacheContents cache = concat_placement(cfg);
  DeliveryPlan p = build_csm_plan(u, DemandVector::worst_case(cfg));
  p.messages.resize(p.matched);  // chains removed
  const DecodeResult r = peel(4, p, u, cache);
  CHECK_FALSE(r.complete());
  // the missing ones are exactly the l1 = 2 layer
  for (const auto& id : r.missing) CHECK(id.l1 == 2);
}

TEST_CASE("byte-level verification") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto cfg = validate_config(4, 3, 3, 2, 7);
    const ByteVerifyReport rep = byte_verify(cfg, DemandVector::worst_case(cfg), seed, 13);
    CHECK(rep.ok);
    CHECK(rep.users == 7);
    CHECK(rep.file_bytes == 72 * 13);
    CHECK(rep.messages == 32);
  }
  const auto cfg = validate_config(5, 4, 2, 3, 9);
  CHECK(byte_verify(cfg, DemandVector::all_same(cfg), 9).ok);
}

TEST_CASE("a corrupted payload yields a wrong reconstruction") {
  const auto cfg = validate_config(3, 3, 2, 2, 6);
  const SubPacketUniverse u(cfg);
  const CacheContents cache = concat_placement(cfg);
  const auto d = DemandVector::worst_case(cfg);
  DeliveryPlan p = build_csm_plan(u, d);
  const FileStore store(u, 8, 5);
  materialize_payloads(p, u, store);
  const auto good = reconstruct_file(0, p, u, cache, store);
  CHECK(std::equal(good.begin(), good.end(), store.file(0).begin()));
  p.messages[0].payload[0] ^= std::byte{0x80};
  int wrong = 0;
  for (int k = 0; k < cfg.users(); ++k) {
    const auto got = reconstruct_file(k, p, u, cache, store);
    wrong += !std::equal(got.begin(), got.end(), store.file(d[k]).begin());
  }
  CHECK(wrong > 0);
}

TEST_CASE("verifier errors") {
  const auto cfg = validate_config(3, 3, 2, 2, 6);
  const SubPacketUniverse u(cfg);
  const CacheContents cache = concat_placement(cfg);
  const DeliveryPlan p = build_csm_plan(u, DemandVector::worst_case(cfg));
  const FileStore store(u, 8, 5);
  CHECK_THROWS_AS(reconstruct_file(0, p, u, cache, store), SizeError);  // no payloads yet
  CHECK_THROWS_AS(gf2_oracle(0, p, u, cache, 4), SizeLimit);
  CHECK_THROWS_AS(peel_decode(6, p, u, cache), RangeError);
  CHECK_NOTHROW(peel(6, p, u, cache));
}

TEST_CASE("each matched message serves t1 + t2 users with one new sub-packet each") {
  for (const auto& cfg : testsupport::grid(2, 5, 2, 4, -1)) {
    const SubPacketUniverse u(cfg);
    const CacheContents cache = concat_placement(cfg);
    const auto d = DemandVector::worst_case(cfg);
    const DeliveryPlan p = build_csm_plan(u, d);
    for (std::size_t i = 0; i < p.matched; ++i) {
      const auto& m = p.messages[i];
      int served = 0;
      for (int k = 0; k < cfg.users(); ++k) {
        int unknown = 0;
        bool wanted = false;
        for (const auto& id : m.constituents) {
          if (cache.holds(k, id)) continue;
          ++unknown;
          wanted = id.file == d[k];
        }
        served += unknown == 1 && wanted;
      }
      CHECK(served == cfg.t1() + cfg.t2());
    }
  }
}
