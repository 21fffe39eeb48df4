#pragma once

#include <cstdint>
#include <vector>

#include "codedcache/subpacket.hpp"

namespace codedcache {

/// Single-group placement over users {first, ..., first+K-1}: user k caches
/// W_{n,T} for every file n and every t-subset T containing k.
class MnCache {
 public:
  int first_user() const noexcept { return first_; }
  int users() const noexcept { return k_; }
  int t() const noexcept { return t_; }
  int files() const noexcept { return n_; }

  bool holds(int user, const PacketId& packet) const noexcept;
  /// Packets of all files cached by `user`, file-major, T in lex order.
  std::vector<PacketId> cached(int user) const;
  std::vector<UserSet> packet_sets() const { return enumerate_user_sets(first_, k_, t_); }
  Rational fraction(int user) const;

 private:
  friend MnCache mn_placement(int, int, int, int);
  MnCache(int first, int k, int t, int n) : first_(first), k_(k), t_(t), n_(n) {}

  int first_;
  int k_;
  int t_;
  int n_;
};

/// Throws RangeError unless 1 <= t <= K and N >= 1.
MnCache mn_placement(int users, int t, int files, int first_user = 0);

/// Two-stage placement. Stage 1 is the single-group placement of the fixed
/// users; stage 2 splits each packet W_{n,A} into t1 * t2 * C(K2,t2)
/// sub-packets and gives mobile user k2 every sub-packet with k2 in B.
/// Membership is structural: fixed user k1 holds (n,A,B,l1,l2) iff k1 in A,
/// mobile user k2 iff k2 in B.
class CacheContents {
 public:
  const SystemConfig& config() const noexcept { return cfg_; }
  const MnCache& fixed_stage() const noexcept { return fixed_; }

  bool holds(int user, const SubPacketId& id) const noexcept {
    return user < cfg_.k1() ? id.a.contains(user) : id.b.contains(user);
  }
  /// Whether `user` holds packet W_{n,A} in full (every sub-packet of it).
  bool holds_packet(int user, const PacketId& packet) const noexcept;

  std::vector<SubPacketId> cached(int user, const SubPacketUniverse& universe) const;
  std::uint64_t cached_per_file(int user, const SubPacketUniverse& universe) const;

  /// True when stage 2 left the fixed users' caches as stage 1 wrote them.
  bool fixed_caches_untouched() const noexcept { return fixed_untouched_; }

 private:
  friend CacheContents concat_placement(const SystemConfig&);
  CacheContents(const SystemConfig& cfg, MnCache fixed, bool untouched)
      : cfg_(cfg), fixed_(fixed), fixed_untouched_(untouched) {}

  SystemConfig cfg_;
  MnCache fixed_;
  bool fixed_untouched_;
};

CacheContents concat_placement(const SystemConfig& cfg);

/// Cached sub-packets per file divided by F, exactly.
Rational cache_fraction(const CacheContents& cache, int user, const SubPacketUniverse& universe);

}  // namespace codedcache
