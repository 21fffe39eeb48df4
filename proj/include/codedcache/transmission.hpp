#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "codedcache/delivery_graph.hpp"
#include "codedcache/file_store.hpp"
#include "codedcache/placement.hpp"

namespace codedcache {

enum class MessageKind { MatchedPair, DirectVertex, ChainLink };
std::string to_string(MessageKind kind);

enum class Part { X, Y };

struct VertexRef {
  Part part = Part::X;
  std::uint32_t index = 0;
  bool operator==(const VertexRef&) const = default;
};

/// One transmitted signal: the XOR of one or two vertex values. `constituents`
/// is the flattened list of sub-packets, first vertex first.
struct CodedMessage {
  MessageKind kind = MessageKind::MatchedPair;
  std::vector<VertexRef> vertices;
  std::vector<SubPacketId> constituents;
  std::vector<std::byte> payload;  // empty until materialized
};

/// An ordered tuple (V^(0), ..., V^(g)) sharing (A, S2, l1) (or (S1, B, l2)),
/// sent as the g links V^(j) xor V^(j+1).
struct ChainGroup {
  Part part = Part::Y;
  std::vector<std::uint32_t> vertices;
  std::size_t first_message = 0;
};

struct DeliveryPlan {
  SystemConfig cfg;
  std::vector<int> demand;
  Side side = Side::SaturateX;
  int layer_limit = 0;
  std::shared_ptr<const DeliveryVertices> vertices;
  std::vector<CodedMessage> messages;
  std::vector<ChainGroup> chains;
  std::size_t matched = 0;
  std::size_t direct = 0;
  std::size_t chain = 0;
  std::uint64_t per_file = 0;  // F

  const std::vector<SubPacketId>& constituents_of(VertexRef v) const {
    return v.part == Part::X ? vertices->x[v.index].constituents : vertices->y[v.index].constituents;
  }
};

/// Matched pairs (ordered by the saturated side's key), then direct sends of
/// unmatched restricted vertices, then chain links grouped per residual tuple.
DeliveryPlan plan_csm_delivery(const SubPacketUniverse& universe, const DemandVector& demand,
                               std::shared_ptr<const DeliveryVertices> vertices,
                               const RestrictedGraph& restricted, const Matching& matching);

/// Builds vertices, restricted graph, saturating matching and the plan.
DeliveryPlan build_csm_plan(const SubPacketUniverse& universe, const DemandVector& demand);

/// |messages| / F.
Rational achieved_rate(const DeliveryPlan& plan);

/// Number of residual chain links, S.
std::uint64_t chain_message_count(const SystemConfig& cfg);
/// |Y'| + S (SaturateX) or |X'| + S (SaturateY).
std::uint64_t closed_form_message_count(const SystemConfig& cfg);

/// Single-group delivery over the users of `cache`: one message per
/// (t+1)-subset S, XOR of W_{d_k, S\{k}} over k in S.
struct MnMessage {
  UserSet s;
  std::vector<PacketId> constituents;
};

struct MnDeliveryPlan {
  int users = 0;
  int t = 0;
  std::vector<MnMessage> messages;
  std::uint64_t packets_per_file = 0;  // C(K,t)

  Rational rate() const {
    return Rational(static_cast<std::int64_t>(messages.size()),
                    static_cast<std::int64_t>(packets_per_file));
  }
};

/// `demand[i]` is the file requested by user cache.first_user() + i.
MnDeliveryPlan mn_delivery(const MnCache& cache, const std::vector<int>& demand);

/// Fills every message payload with the bytewise XOR of its constituents.
/// Throws SizeError when the store does not match the plan's configuration.
void materialize_payloads(DeliveryPlan& plan, const SubPacketUniverse& universe, const FileStore& store);

}  // namespace codedcache
