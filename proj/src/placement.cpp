#include "codedcache/placement.hpp"

#include "codedcache/errors.hpp"

namespace codedcache {

MnCache mn_placement(int users, int t, int files, int first_user) {
  if (users < 1) throw RangeError("user count must be positive");
  if (t < 1 || t > users) {
    throw RangeError("t=" + std::to_string(t) + " outside [1, " + std::to_string(users) + "]");
  }
  if (files < 1) throw RangeError("file count must be positive");
  if (first_user < 0 || first_user + users > 64) throw RangeError("user range exceeds 64 users");
  return MnCache(first_user, users, t, files);
}

bool MnCache::holds(int user, const PacketId& packet) const noexcept {
  return packet.t.contains(user);
}

std::vector<PacketId> MnCache::cached(int user) const {
  std::vector<PacketId> out;
  const auto sets = packet_sets();
  for (int n = 0; n < n_; ++n) {
    for (UserSet s : sets) {
      if (s.contains(user)) out.push_back(PacketId{n, s});
    }
  }
  return out;
}

Rational MnCache::fraction(int user) const {
  if (user < first_ || user >= first_ + k_) throw RangeError("user outside this group");
  return Rational(static_cast<std::int64_t>(binomial(k_ - 1, t_ - 1)), static_cast<std::int64_t>(binomial(k_, t_)));
}

bool CacheContents::holds_packet(int user, const PacketId& packet) const noexcept {
  // Sub-packets of W_{n,A} share A, so a fixed user holds all or none of them;
  // a mobile user never holds a whole packet.
  return user < cfg_.k1() && packet.t.contains(user);
}

std::vector<SubPacketId> CacheContents::cached(int user, const SubPacketUniverse& universe) const {
  std::vector<SubPacketId> out;
  for (int n = 0; n < cfg_.files(); ++n) {
    for (UserSet a : universe.a_sets()) {
      for (UserSet b : universe.b_sets()) {
        if (user < cfg_.k1() ? !a.contains(user) : !b.contains(user)) continue;
        for (int l1 = 0; l1 < cfg_.t1(); ++l1) {
          for (int l2 = 0; l2 < cfg_.t2(); ++l2) out.push_back(SubPacketId{n, a, b, l1, l2});
        }
      }
    }
  }
  return out;
}

std::uint64_t CacheContents::cached_per_file(int user, const SubPacketUniverse& universe) const {
  std::uint64_t sets = 0;
  for (UserSet a : universe.a_sets()) {
    for (UserSet b : universe.b_sets()) {
      if (user < cfg_.k1() ? a.contains(user) : b.contains(user)) ++sets;
    }
  }
  return sets * static_cast<std::uint64_t>(cfg_.t1()) * static_cast<std::uint64_t>(cfg_.t2());
}

CacheContents concat_placement(const SystemConfig& cfg) {
  // Stage 1: fixed users, packets W_{n,A}.
  const MnCache fixed = mn_placement(cfg.k1(), cfg.t1(), cfg.files(), 0);
  // Stage 2 subdivides W_{n,A} into W^{(l2,l1)}_{n,A,B} and hands the pieces
  // to mobile users by B. Record whether every fixed user still holds exactly
  // the refinement of its stage-1 packets.
  CacheContents staged(cfg, fixed, false);
  bool untouched = true;
  const auto a_sets = enumerate_user_sets(0, cfg.k1(), cfg.t1());
  const auto b_sets = enumerate_user_sets(cfg.k1(), cfg.k2(), cfg.t2());
  for (int k1 = 0; k1 < cfg.k1() && untouched; ++k1) {
    for (UserSet a : a_sets) {
      const bool whole = fixed.holds(k1, PacketId{0, a});
      for (UserSet b : b_sets) {
        if (staged.holds(k1, SubPacketId{0, a, b, 0, 0}) != whole) untouched = false;
      }
    }
  }
  return CacheContents(cfg, fixed, untouched);
}

Rational cache_fraction(const CacheContents& cache, int user, const SubPacketUniverse& universe) {
  if (user < 0 || user >= cache.config().users()) throw RangeError("user out of range");
  return Rational(static_cast<std::int64_t>(cache.cached_per_file(user, universe)),
                  static_cast<std::int64_t>(universe.per_file()));
}

}  // namespace codedcache
