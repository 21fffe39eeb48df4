#include "codedcache/verifier.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "codedcache/errors.hpp"
#include "codedcache/gf2.hpp"
#include "codedcache/simd/xor_kernels.hpp"

namespace codedcache {

namespace {

std::uint64_t vertex_key(VertexRef r) { return (static_cast<std::uint64_t>(r.part == Part::Y) << 32) | r.index; }

// Peeling over sub-packets and vertex values. With a store, byte values are
// carried along; without one only knowledge is tracked.
class Peeler {
 public:
  Peeler(int user, const DeliveryPlan& plan, const SubPacketUniverse& universe, const CacheContents& cache,
         const FileStore* store)
      : plan_(plan), universe_(universe), store_(store), s_(store ? store->subpacket_bytes() : 0) {
    for (const CodedMessage& m : plan.messages) {
      std::vector<std::uint32_t> refs;
      for (VertexRef r : m.vertices) refs.push_back(vertex_id(r));
      msg_vertices_.push_back(std::move(refs));
    }
    known_p_.assign(packets_.size(), 0);
    known_v_.assign(vertex_packets_.size(), 0);
    if (store_) {
      pval_.assign(packets_.size() * s_, std::byte{0});
      vval_.assign(vertex_packets_.size() * s_, std::byte{0});
    }
    for (std::size_t p = 0; p < packets_.size(); ++p) {
      if (cache.holds(user, packets_[p])) set_packet(p, store_ ? store_->slice(ordinals_[p]) : Bytes{});
    }
  }

  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < vertex_packets_.size(); ++v) changed |= resolve_vertex(v);
      for (std::size_t m = 0; m < msg_vertices_.size(); ++m) changed |= resolve_message(m);
    }
  }

  std::optional<std::size_t> local(const SubPacketId& id) const {
    auto it = index_.find(universe_.ordinal(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool known(std::size_t p) const { return known_p_[p] != 0; }
  std::span<const std::byte> value(std::size_t p) const { return {pval_.data() + p * s_, s_}; }

 private:
  using Bytes = std::span<const std::byte>;

  std::uint32_t packet_id(const SubPacketId& id) {
    const std::uint64_t ord = universe_.ordinal(id);
    auto [it, inserted] = index_.try_emplace(ord, static_cast<std::uint32_t>(packets_.size()));
    if (inserted) {
      packets_.push_back(id);
      ordinals_.push_back(ord);
    }
    return it->second;
  }

  std::uint32_t vertex_id(VertexRef r) {
    auto [it, inserted] = vertex_index_.try_emplace(vertex_key(r), static_cast<std::uint32_t>(vertex_packets_.size()));
    if (inserted) {
      std::vector<std::uint32_t> ps;
      for (const SubPacketId& id : plan_.constituents_of(r)) ps.push_back(packet_id(id));
      vertex_packets_.push_back(std::move(ps));
    }
    return it->second;
  }

  std::span<std::byte> pbuf(std::size_t p) { return {pval_.data() + p * s_, s_}; }
  std::span<std::byte> vbuf(std::size_t v) { return {vval_.data() + v * s_, s_}; }

  void set_packet(std::size_t p, Bytes bytes) {
    known_p_[p] = 1;
    if (store_) std::copy(bytes.begin(), bytes.end(), pbuf(p).begin());
  }

  bool resolve_vertex(std::size_t v) {
    const auto& ps = vertex_packets_[v];
    std::size_t unknown = 0;
    std::size_t last = 0;
    for (std::uint32_t p : ps) {
      if (!known_p_[p]) {
        ++unknown;
        last = p;
      }
    }
    if (unknown == 0 && !known_v_[v]) {
      known_v_[v] = 1;
      if (store_) {
        auto out = vbuf(v);
        std::fill(out.begin(), out.end(), std::byte{0});
        for (std::uint32_t p : ps) simd::xor_into(out, value(p));
      }
      return true;
    }
    if (unknown == 1 && known_v_[v]) {
      if (store_) {
        auto out = pbuf(last);
        auto vv = vbuf(v);
        std::copy(vv.begin(), vv.end(), out.begin());
        for (std::uint32_t p : ps) {
          if (p != last) simd::xor_into(out, value(p));
        }
      }
      known_p_[last] = 1;
      return true;
    }
    return false;
  }

  bool resolve_message(std::size_t m) {
    const auto& vs = msg_vertices_[m];
    std::size_t unknown = 0;
    std::uint32_t last = 0;
    for (std::uint32_t v : vs) {
      if (!known_v_[v]) {
        ++unknown;
        last = v;
      }
    }
    if (unknown != 1) return false;
    if (store_) {
      const auto& payload = plan_.messages[m].payload;
      auto out = vbuf(last);
      std::copy(payload.begin(), payload.end(), out.begin());
      for (std::uint32_t v : vs) {
        if (v != last) simd::xor_into(out, std::span<const std::byte>(vval_.data() + v * s_, s_));
      }
    }
    known_v_[last] = 1;
    return true;
  }

  const DeliveryPlan& plan_;
  const SubPacketUniverse& universe_;
  const FileStore* store_;
  std::size_t s_;

  std::vector<SubPacketId> packets_;
  std::vector<std::uint64_t> ordinals_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::unordered_map<std::uint64_t, std::uint32_t> vertex_index_;
  std::vector<std::vector<std::uint32_t>> vertex_packets_;
  std::vector<std::vector<std::uint32_t>> msg_vertices_;
  std::vector<char> known_p_;
  std::vector<char> known_v_;
  std::vector<std::byte> pval_;
  std::vector<std::byte> vval_;
};

void check_user(int user, const DeliveryPlan& plan) {
  if (user < 0 || user >= plan.cfg.users()) throw RangeError("user " + std::to_string(user) + " out of range");
}

std::string describe_missing(int user, const std::vector<SubPacketId>& missing) {
  std::ostringstream os;
  os << "user " << user << " cannot recover " << missing.size() << " sub-packet(s)";
  if (!missing.empty()) os << ", first " << to_string(missing.front());
  return os.str();
}

}  // namespace

DecodeResult peel(int user, const DeliveryPlan& plan, const SubPacketUniverse& universe,
                  const CacheContents& cache) {
  DecodeResult result;
  result.user = user;
  if (user < 0 || user >= plan.cfg.users()) return result;
  Peeler peeler(user, plan, universe, cache, nullptr);
  peeler.run();
  const auto file = static_cast<std::uint64_t>(plan.demand[static_cast<std::size_t>(user)]);
  for (std::uint64_t j = 0; j < plan.per_file; ++j) {
    const SubPacketId id = universe.id_at(file * plan.per_file + j);
    if (cache.holds(user, id)) continue;
    const auto p = peeler.local(id);
    if (p && peeler.known(*p)) {
      result.decoded.push_back(id);
    } else {
      result.missing.push_back(id);
    }
  }
  return result;
}

std::vector<SubPacketId> peel_decode(int user, const DeliveryPlan& plan, const SubPacketUniverse& universe,
                                     const CacheContents& cache) {
  check_user(user, plan);
  DecodeResult r = peel(user, plan, universe, cache);
  if (!r.complete()) throw DecodeFailure(describe_missing(user, r.missing));
  return std::move(r.decoded);
}

std::vector<std::byte> reconstruct_file(int user, const DeliveryPlan& plan, const SubPacketUniverse& universe,
                                        const CacheContents& cache, const FileStore& store) {
  check_user(user, plan);
  const std::size_t s = store.subpacket_bytes();
  for (const CodedMessage& m : plan.messages) {
    if (m.payload.size() != s) throw SizeError("message payloads are not materialized at the store's size");
  }
  Peeler peeler(user, plan, universe, cache, &store);
  peeler.run();
  const auto file = static_cast<std::uint64_t>(plan.demand[static_cast<std::size_t>(user)]);
  std::vector<std::byte> out(plan.per_file * s);
  std::vector<SubPacketId> missing;
  for (std::uint64_t j = 0; j < plan.per_file; ++j) {
    const std::uint64_t ord = file * plan.per_file + j;
    const SubPacketId id = universe.id_at(ord);
    std::span<const std::byte> src;
    if (cache.holds(user, id)) {
      src = store.slice(ord);
    } else if (auto p = peeler.local(id); p && peeler.known(*p)) {
      src = peeler.value(*p);
    } else {
      missing.push_back(id);
      continue;
    }
    std::copy(src.begin(), src.end(), out.begin() + static_cast<std::ptrdiff_t>(j * s));
  }
  if (!missing.empty()) throw DecodeFailure(describe_missing(user, missing));
  return out;
}

ByteVerifyReport byte_verify(const SystemConfig& cfg, const DemandVector& demand, std::uint64_t seed,
                             std::size_t subpacket_bytes) {
  const SubPacketUniverse universe(cfg);
  const CacheContents cache = concat_placement(cfg);
  DeliveryPlan plan = build_csm_plan(universe, demand);
  const FileStore store(universe, subpacket_bytes, seed);
  materialize_payloads(plan, universe, store);
  for (int k = 0; k < cfg.users(); ++k) {
    const std::vector<std::byte> got = reconstruct_file(k, plan, universe, cache, store);
    const auto want = store.file(demand[k]);
    const auto diff = std::mismatch(got.begin(), got.end(), want.begin(), want.end());
    if (diff.first != got.end() || diff.second != want.end()) {
      const auto offset = static_cast<std::size_t>(diff.first - got.begin());
      const SubPacketId id = universe.id_at(static_cast<std::uint64_t>(demand[k]) * plan.per_file + offset / subpacket_bytes);
      throw MismatchError("user " + std::to_string(k) + " reconstructs file " + std::to_string(demand[k]) +
                              " incorrectly at byte " + std::to_string(offset) + " (" + to_string(id) + ")",
                          k, offset);
    }
  }
  return {true, seed, static_cast<std::size_t>(cfg.users()), store.file_bytes(), plan.messages.size()};
}

OracleResult gf2_oracle(int user, const DeliveryPlan& plan, const SubPacketUniverse& universe,
                        const CacheContents& cache, std::uint64_t max_bits) {
  check_user(user, plan);
  std::unordered_map<std::uint64_t, std::size_t> column;
  for (const CodedMessage& m : plan.messages) {
    for (const SubPacketId& id : m.constituents) {
      if (!cache.holds(user, id)) column.try_emplace(universe.ordinal(id), 0);
    }
  }
  std::vector<std::uint64_t> ordinals;
  ordinals.reserve(column.size());
  for (const auto& [ord, _] : column) ordinals.push_back(ord);
  std::sort(ordinals.begin(), ordinals.end());
  for (std::size_t c = 0; c < ordinals.size(); ++c) column[ordinals[c]] = c;

  OracleResult r;
  r.equations = plan.messages.size();
  r.unknowns = ordinals.size();
  if (static_cast<double>(r.equations) * static_cast<double>(r.unknowns) > static_cast<double>(max_bits)) {
    throw SizeLimit("binary system of " + std::to_string(r.equations) + " x " + std::to_string(r.unknowns) +
                    " exceeds the cap of " + std::to_string(max_bits) + " bits");
  }
  BitMatrix m(r.equations, r.unknowns);
  for (std::size_t i = 0; i < plan.messages.size(); ++i) {
    for (const SubPacketId& id : plan.messages[i].constituents) {
      if (!cache.holds(user, id)) m.flip(i, column.at(universe.ordinal(id)));
    }
  }
  const Gf2Basis basis(std::move(m));
  r.rank = basis.rank();
  const auto file = static_cast<std::uint64_t>(plan.demand[static_cast<std::size_t>(user)]);
  for (std::uint64_t j = 0; j < plan.per_file; ++j) {
    const std::uint64_t ord = file * plan.per_file + j;
    const SubPacketId id = universe.id_at(ord);
    if (cache.holds(user, id)) continue;
    auto it = column.find(ord);
    if (it == column.end() || !basis.spans_unit(it->second)) r.unreachable.push_back(id);
  }
  r.decodable = r.unreachable.empty();
  return r;
}

}  // namespace codedcache
