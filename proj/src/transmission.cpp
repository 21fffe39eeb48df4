#include "codedcache/transmission.hpp"

#include "codedcache/errors.hpp"
#include "codedcache/simd/xor_kernels.hpp"

namespace codedcache {

std::string to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::MatchedPair: return "matched";
    case MessageKind::DirectVertex: return "direct";
    case MessageKind::ChainLink: return "chain";
  }
  return "unknown";
}

namespace {

CodedMessage make_message(const DeliveryVertices& v, MessageKind kind, std::vector<VertexRef> refs) {
  CodedMessage m;
  m.kind = kind;
  for (const VertexRef& r : refs) {
    const auto& c = r.part == Part::X ? v.x[r.index].constituents : v.y[r.index].constituents;
    m.constituents.insert(m.constituents.end(), c.begin(), c.end());
  }
  m.vertices = std::move(refs);
  return m;
}

}  // namespace

DeliveryPlan plan_csm_delivery(const SubPacketUniverse& universe, const DemandVector& demand,
                               std::shared_ptr<const DeliveryVertices> vertices,
                               const RestrictedGraph& restricted, const Matching& matching) {
  const SystemConfig& cfg = universe.config();
  const DeliveryVertices& v = *vertices;
  DeliveryPlan plan{cfg, std::vector<int>(demand.files().begin(), demand.files().end()), restricted.side,
                    restricted.layer_limit, vertices, {}, {}, 0, 0, 0, universe.per_file()};
  const bool saturate_x = restricted.side == Side::SaturateX;
  const Part left_part = saturate_x ? Part::X : Part::Y;
  const Part right_part = saturate_x ? Part::Y : Part::X;

  // Matched pairs, in the saturated side's canonical order.
  for (std::size_t i = 0; i < restricted.left_ids.size(); ++i) {
    const std::int32_t j = matching.left_to_right.at(i);
    if (j == kUnmatched) continue;
    const VertexRef left{left_part, restricted.left_ids[i]};
    const VertexRef right{right_part, restricted.right_ids[static_cast<std::size_t>(j)]};
    plan.messages.push_back(make_message(v, MessageKind::MatchedPair,
                                         saturate_x ? std::vector{left, right} : std::vector{right, left}));
    ++plan.matched;
  }

  // Restricted vertices left over by the matching go out alone.
  for (std::size_t j = 0; j < restricted.right_ids.size(); ++j) {
    if (matching.right_to_left.at(j) != kUnmatched) continue;
    plan.messages.push_back(
        make_message(v, MessageKind::DirectVertex, {VertexRef{right_part, restricted.right_ids[j]}}));
    ++plan.direct;
  }

  // Vertices outside the restricted layers: tuples over the position index,
  // sent as consecutive pairwise XORs.
  const VertexIndex index(universe);
  const int limit = restricted.layer_limit;
  std::size_t residual_seen = 0;
  auto emit_chain = [&](Part part, std::vector<std::uint32_t> tuple) {
    ChainGroup group{part, std::move(tuple), plan.messages.size()};
    for (std::size_t j = 0; j + 1 < group.vertices.size(); ++j) {
      plan.messages.push_back(make_message(
          v, MessageKind::ChainLink, {VertexRef{part, group.vertices[j]}, VertexRef{part, group.vertices[j + 1]}}));
      ++plan.chain;
    }
    residual_seen += group.vertices.size();
    plan.chains.push_back(std::move(group));
  };

  if (saturate_x) {
    for (UserSet a : universe.a_sets()) {
      for (UserSet s2 : universe.s2_sets()) {
        for (int l1 = limit; l1 < cfg.t1(); ++l1) {
          std::vector<std::uint32_t> tuple;
          for (int m2 = 0; m2 <= cfg.t2(); ++m2) {
            const std::uint32_t yi = index.y(a, s2, l1, m2);
            const YVertex& y = v.y.at(yi);
            if (y.a != a || y.s2 != s2 || y.l1 != l1 || y.m2 != m2) {
              throw PlanError("residual vertex " + to_string(y) + " out of canonical position");
            }
            tuple.push_back(yi);
          }
          emit_chain(Part::Y, std::move(tuple));
        }
      }
    }
  } else {
    for (UserSet s1 : universe.s1_sets()) {
      for (UserSet b : universe.b_sets()) {
        for (int l2 = limit; l2 < cfg.t2(); ++l2) {
          std::vector<std::uint32_t> tuple;
          for (int m1 = 0; m1 <= cfg.t1(); ++m1) {
            const std::uint32_t xi = index.x(s1, b, l2, m1);
            const XVertex& x = v.x.at(xi);
            if (x.s1 != s1 || x.b != b || x.l2 != l2 || x.m1 != m1) {
              throw PlanError("residual vertex " + to_string(x) + " out of canonical position");
            }
            tuple.push_back(xi);
          }
          emit_chain(Part::X, std::move(tuple));
        }
      }
    }
  }

  std::size_t residual_expected = 0;
  if (saturate_x) {
    for (const YVertex& y : v.y) residual_expected += y.l1 >= limit;
  } else {
    for (const XVertex& x : v.x) residual_expected += x.l2 >= limit;
  }
  if (residual_seen != residual_expected) {
    throw PlanError("chain tuples cover " + std::to_string(residual_seen) + " of " +
                    std::to_string(residual_expected) + " residual vertices");
  }
  return plan;
}

DeliveryPlan build_csm_plan(const SubPacketUniverse& universe, const DemandVector& demand) {
  auto vertices = std::make_shared<DeliveryVertices>();
  vertices->x = build_x_vertices(universe, demand);
  vertices->y = build_y_vertices(universe, demand);
  const RestrictedGraph restricted = restrict_subgraph(universe, *vertices);
  const Matching matching = saturating_matching(restricted);
  return plan_csm_delivery(universe, demand, std::move(vertices), restricted, matching);
}

Rational achieved_rate(const DeliveryPlan& plan) {
  return Rational(static_cast<std::int64_t>(plan.messages.size()), static_cast<std::int64_t>(plan.per_file));
}

std::uint64_t chain_message_count(const SystemConfig& cfg) {
  const auto L = static_cast<std::uint64_t>(layer_limit(cfg));
  const auto t1 = static_cast<std::uint64_t>(cfg.t1());
  const auto t2 = static_cast<std::uint64_t>(cfg.t2());
  if (saturated_side(cfg) == Side::SaturateX) {
    return (t1 - L) * binomial(cfg.k1(), cfg.t1()) * binomial(cfg.k2(), cfg.t2() + 1) * t2;
  }
  return (t2 - L) * binomial(cfg.k2(), cfg.t2()) * binomial(cfg.k1(), cfg.t1() + 1) * t1;
}

std::uint64_t closed_form_message_count(const SystemConfig& cfg) {
  const auto L = static_cast<std::uint64_t>(layer_limit(cfg));
  const auto t1 = static_cast<std::uint64_t>(cfg.t1());
  const auto t2 = static_cast<std::uint64_t>(cfg.t2());
  std::uint64_t restricted = 0;
  if (saturated_side(cfg) == Side::SaturateX) {
    restricted = L * (t2 + 1) * binomial(cfg.k1(), cfg.t1()) * binomial(cfg.k2(), cfg.t2() + 1);
  } else {
    restricted = L * (t1 + 1) * binomial(cfg.k1(), cfg.t1() + 1) * binomial(cfg.k2(), cfg.t2());
  }
  return restricted + chain_message_count(cfg);
}

MnDeliveryPlan mn_delivery(const MnCache& cache, const std::vector<int>& demand) {
  if (demand.size() != static_cast<std::size_t>(cache.users())) {
    throw RangeError("demand vector size does not match the group size");
  }
  for (int d : demand) {
    if (d < 0 || d >= cache.files()) throw RangeError("demanded file " + std::to_string(d) + " out of range");
  }
  MnDeliveryPlan plan;
  plan.users = cache.users();
  plan.t = cache.t();
  plan.packets_per_file = binomial(cache.users(), cache.t());
  if (cache.t() == cache.users()) return plan;
  for (UserSet s : enumerate_user_sets(cache.first_user(), cache.users(), cache.t() + 1)) {
    MnMessage m{s, {}};
    for (int k : s.members()) {
      m.constituents.push_back(PacketId{demand[static_cast<std::size_t>(k - cache.first_user())], s.without(k)});
    }
    plan.messages.push_back(std::move(m));
  }
  return plan;
}

void materialize_payloads(DeliveryPlan& plan, const SubPacketUniverse& universe, const FileStore& store) {
  if (!(universe.config() == plan.cfg)) throw SizeError("universe and plan configurations differ");
  if (store.files() != plan.cfg.files() ||
      store.file_bytes() != static_cast<std::size_t>(plan.per_file) * store.subpacket_bytes()) {
    throw SizeError("file store does not match the plan's configuration");
  }
  const std::size_t s = store.subpacket_bytes();
  for (CodedMessage& m : plan.messages) {
    m.payload.assign(s, std::byte{0});
    for (const SubPacketId& id : m.constituents) simd::xor_into(m.payload, store.slice(universe.ordinal(id)));
  }
}

}  // namespace codedcache
