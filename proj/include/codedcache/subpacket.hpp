#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "codedcache/combinatorics.hpp"
#include "codedcache/config.hpp"

namespace codedcache {

/// W^{(l2,l1)}_{n,A,B}: file `file`, group-1 set `a` (|a| = t1), group-2 set
/// `b` (|b| = t2), layers l1 in [0,t1) and l2 in [0,t2).
struct SubPacketId {
  int file = 0;
  UserSet a;
  UserSet b;
  int l1 = 0;
  int l2 = 0;

  bool operator==(const SubPacketId&) const = default;
  auto operator<=>(const SubPacketId&) const = default;
};

/// W_{n,T} of the single-group placement.
struct PacketId {
  int file = 0;
  UserSet t;

  bool operator==(const PacketId&) const = default;
  auto operator<=>(const PacketId&) const = default;
};

std::string to_string(const SubPacketId& id);
std::string to_string(const PacketId& id);

/// The canonical numbering of all sub-packets of a configuration. Within a
/// file, ids are ordered by (rank A, rank B, l1, l2); the global ordinal is
/// file * F + local ordinal.
class SubPacketUniverse {
 public:
  explicit SubPacketUniverse(const SystemConfig& cfg);

  const SystemConfig& config() const noexcept { return cfg_; }
  /// Sub-packets per file, F = t1 * t2 * C(K1,t1) * C(K2,t2).
  std::uint64_t per_file() const noexcept { return per_file_; }
  std::uint64_t total() const noexcept { return per_file_ * static_cast<std::uint64_t>(cfg_.files()); }

  std::uint64_t ordinal(const SubPacketId& id) const;
  std::uint64_t local_ordinal(const SubPacketId& id) const;
  SubPacketId id_at(std::uint64_t ordinal) const;

  /// Lexicographic enumerations used by placement and delivery.
  const std::vector<UserSet>& a_sets() const noexcept { return a_sets_; }    // t1-subsets of group 1
  const std::vector<UserSet>& b_sets() const noexcept { return b_sets_; }    // t2-subsets of group 2
  const std::vector<UserSet>& s1_sets() const noexcept { return s1_sets_; }  // (t1+1)-subsets of group 1
  const std::vector<UserSet>& s2_sets() const noexcept { return s2_sets_; }  // (t2+1)-subsets of group 2

  std::uint32_t rank_a(UserSet s) const { return lookup(a_rank_, s); }
  std::uint32_t rank_b(UserSet s) const { return lookup(b_rank_, s); }
  std::uint32_t rank_s1(UserSet s) const { return lookup(s1_rank_, s); }
  std::uint32_t rank_s2(UserSet s) const { return lookup(s2_rank_, s); }

  UserSet group1() const noexcept;
  UserSet group2() const noexcept;

 private:
  using RankMap = std::unordered_map<std::uint64_t, std::uint32_t>;
  static std::uint32_t lookup(const RankMap& m, UserSet s);
  static RankMap index(const std::vector<UserSet>& sets);

  SystemConfig cfg_;
  std::uint64_t per_file_;
  std::vector<UserSet> a_sets_, b_sets_, s1_sets_, s2_sets_;
  RankMap a_rank_, b_rank_, s1_rank_, s2_rank_;
};

}  // namespace codedcache
