#include "codedcache/subpacket.hpp"

#include "codedcache/errors.hpp"

namespace codedcache {

std::string to_string(const SubPacketId& id) {
  return "W^(" + std::to_string(id.l2) + "," + std::to_string(id.l1) + ")_" + std::to_string(id.file) + "," +
         to_string(id.a) + "," + to_string(id.b);
}

std::string to_string(const PacketId& id) {
  return "W_" + std::to_string(id.file) + "," + to_string(id.t);
}

SubPacketUniverse::SubPacketUniverse(const SystemConfig& cfg)
    : cfg_(cfg),
      a_sets_(enumerate_user_sets(0, cfg.k1(), cfg.t1())),
      b_sets_(enumerate_user_sets(cfg.k1(), cfg.k2(), cfg.t2())),
      s1_sets_(enumerate_user_sets(0, cfg.k1(), cfg.t1() + 1)),
      s2_sets_(enumerate_user_sets(cfg.k1(), cfg.k2(), cfg.t2() + 1)) {
  per_file_ = static_cast<std::uint64_t>(cfg.t1()) * static_cast<std::uint64_t>(cfg.t2()) * a_sets_.size() *
              b_sets_.size();
  a_rank_ = index(a_sets_);
  b_rank_ = index(b_sets_);
  s1_rank_ = index(s1_sets_);
  s2_rank_ = index(s2_sets_);
}

SubPacketUniverse::RankMap SubPacketUniverse::index(const std::vector<UserSet>& sets) {
  RankMap m;
  m.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) m.emplace(sets[i].mask(), static_cast<std::uint32_t>(i));
  return m;
}

std::uint32_t SubPacketUniverse::lookup(const RankMap& m, UserSet s) {
  auto it = m.find(s.mask());
  if (it == m.end()) throw RangeError("set " + to_string(s) + " is not part of this configuration");
  return it->second;
}

UserSet SubPacketUniverse::group1() const noexcept {
  return UserSet((std::uint64_t{1} << cfg_.k1()) - 1);
}

UserSet SubPacketUniverse::group2() const noexcept {
  return UserSet(((std::uint64_t{1} << cfg_.k2()) - 1) << cfg_.k1());
}

std::uint64_t SubPacketUniverse::local_ordinal(const SubPacketId& id) const {
  if (id.l1 < 0 || id.l1 >= cfg_.t1() || id.l2 < 0 || id.l2 >= cfg_.t2()) {
    throw RangeError("layer out of range in " + to_string(id));
  }
  const std::uint64_t a = rank_a(id.a);
  const std::uint64_t b = rank_b(id.b);
  return ((a * b_sets_.size() + b) * static_cast<std::uint64_t>(cfg_.t1()) + static_cast<std::uint64_t>(id.l1)) *
             static_cast<std::uint64_t>(cfg_.t2()) +
         static_cast<std::uint64_t>(id.l2);
}

std::uint64_t SubPacketUniverse::ordinal(const SubPacketId& id) const {
  if (id.file < 0 || id.file >= cfg_.files()) throw RangeError("file out of range in " + to_string(id));
  return static_cast<std::uint64_t>(id.file) * per_file_ + local_ordinal(id);
}

SubPacketId SubPacketUniverse::id_at(std::uint64_t ordinal) const {
  if (ordinal >= total()) throw RangeError("ordinal " + std::to_string(ordinal) + " outside the universe");
  SubPacketId id;
  id.file = static_cast<int>(ordinal / per_file_);
  std::uint64_t rest = ordinal % per_file_;
  const auto t1 = static_cast<std::uint64_t>(cfg_.t1());
  const auto t2 = static_cast<std::uint64_t>(cfg_.t2());
  id.l2 = static_cast<int>(rest % t2);
  rest /= t2;
  id.l1 = static_cast<int>(rest % t1);
  rest /= t1;
  id.b = b_sets_[rest % b_sets_.size()];
  id.a = a_sets_[rest / b_sets_.size()];
  return id;
}

}  // namespace codedcache
