#include "codedcache/delivery_graph.hpp"

#include <algorithm>

#include "codedcache/errors.hpp"

namespace codedcache {

std::string to_string(const XVertex& x) {
  return "X^(" + std::to_string(x.l2) + "," + std::to_string(x.m1) + ")_" + to_string(x.s1) + "," + to_string(x.b);
}

std::string to_string(const YVertex& y) {
  return "Y^(" + std::to_string(y.m2) + "," + std::to_string(y.l1) + ")_" + to_string(y.a) + "," + to_string(y.s2);
}

std::string to_string(Side side) {
  return side == Side::SaturateX ? "saturate-x" : "saturate-y";
}

std::vector<XVertex> build_x_vertices(const SubPacketUniverse& universe, const DemandVector& demand) {
  const SystemConfig& cfg = universe.config();
  const int t1 = cfg.t1();
  std::vector<XVertex> out;
  out.reserve(universe.s1_sets().size() * universe.b_sets().size() * static_cast<std::size_t>(cfg.t2()) *
              static_cast<std::size_t>(t1 + 1));
  for (UserSet s1 : universe.s1_sets()) {
    const std::vector<int> members = s1.members();
    for (UserSet b : universe.b_sets()) {
      for (int l2 = 0; l2 < cfg.t2(); ++l2) {
        for (int m1 = 0; m1 <= t1; ++m1) {
          XVertex x{s1, b, l2, m1, {}};
          x.constituents.reserve(static_cast<std::size_t>(t1));
          for (int mp = 0; mp <= t1; ++mp) {
            if (mp == m1) continue;
            const int k = members[static_cast<std::size_t>(mp)];
            const int layer = mp < m1 ? m1 - 1 : m1;
            x.constituents.push_back(SubPacketId{demand[k], s1.without(k), b, layer, l2});
          }
          out.push_back(std::move(x));
        }
      }
    }
  }
  return out;
}

std::vector<YVertex> build_y_vertices(const SubPacketUniverse& universe, const DemandVector& demand) {
  const SystemConfig& cfg = universe.config();
  const int t2 = cfg.t2();
  std::vector<YVertex> out;
  out.reserve(universe.a_sets().size() * universe.s2_sets().size() * static_cast<std::size_t>(cfg.t1()) *
              static_cast<std::size_t>(t2 + 1));
  for (UserSet a : universe.a_sets()) {
    for (UserSet s2 : universe.s2_sets()) {
      const std::vector<int> members = s2.members();
      for (int l1 = 0; l1 < cfg.t1(); ++l1) {
        for (int m2 = 0; m2 <= t2; ++m2) {
          YVertex y{a, s2, m2, l1, {}};
          y.constituents.reserve(static_cast<std::size_t>(t2));
          for (int mp = 0; mp <= t2; ++mp) {
            if (mp == m2) continue;
            const int k = members[static_cast<std::size_t>(mp)];
            const int layer = mp < m2 ? m2 - 1 : m2;
            y.constituents.push_back(SubPacketId{demand[k], a, s2.without(k), l1, layer});
          }
          out.push_back(std::move(y));
        }
      }
    }
  }
  return out;
}

std::uint32_t VertexIndex::x(UserSet s1, UserSet b, int l2, int m1) const {
  const SystemConfig& cfg = universe_->config();
  const std::uint64_t idx =
      ((std::uint64_t{universe_->rank_s1(s1)} * universe_->b_sets().size() + universe_->rank_b(b)) *
           static_cast<std::uint64_t>(cfg.t2()) +
       static_cast<std::uint64_t>(l2)) *
          static_cast<std::uint64_t>(cfg.t1() + 1) +
      static_cast<std::uint64_t>(m1);
  return static_cast<std::uint32_t>(idx);
}

std::uint32_t VertexIndex::y(UserSet a, UserSet s2, int l1, int m2) const {
  const SystemConfig& cfg = universe_->config();
  const std::uint64_t idx =
      ((std::uint64_t{universe_->rank_a(a)} * universe_->s2_sets().size() + universe_->rank_s2(s2)) *
           static_cast<std::uint64_t>(cfg.t1()) +
       static_cast<std::uint64_t>(l1)) *
          static_cast<std::uint64_t>(cfg.t2() + 1) +
      static_cast<std::uint64_t>(m2);
  return static_cast<std::uint32_t>(idx);
}

std::vector<std::uint32_t> x_neighbors(const SubPacketUniverse& universe, const DeliveryVertices& v,
                                       std::uint32_t xi, int l1_limit) {
  const XVertex& x = v.x.at(xi);
  const VertexIndex index(universe);
  const UserSet a = x.reduced();
  std::vector<std::uint32_t> out;
  for (int k2 : universe.group2().members()) {
    if (x.b.contains(k2)) continue;
    const UserSet s2 = x.b.with(k2);
    const int m2 = s2.position(k2);
    for (int l1 = 0; l1 < l1_limit; ++l1) out.push_back(index.y(a, s2, l1, m2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> y_neighbors(const SubPacketUniverse& universe, const DeliveryVertices& v,
                                       std::uint32_t yi, int l2_limit) {
  const YVertex& y = v.y.at(yi);
  const VertexIndex index(universe);
  const UserSet b = y.reduced();
  std::vector<std::uint32_t> out;
  for (int k1 : universe.group1().members()) {
    if (y.a.contains(k1)) continue;
    const UserSet s1 = y.a.with(k1);
    const int m1 = s1.position(k1);
    for (int l2 = 0; l2 < l2_limit; ++l2) out.push_back(index.x(s1, b, l2, m1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteGraph build_edges(const SubPacketUniverse& universe, const DeliveryVertices& v) {
  std::vector<std::vector<std::uint32_t>> adjacency(v.x.size());
  for (std::size_t i = 0; i < v.x.size(); ++i) {
    adjacency[i] = x_neighbors(universe, v, static_cast<std::uint32_t>(i), universe.config().t1());
  }
  return BipartiteGraph(v.y.size(), std::move(adjacency));
}

Side saturated_side(const SystemConfig& cfg) {
  // t1/K1 >= t2/K2, i.e. M1 >= M2 for a shared N.
  return cfg.t1() * cfg.k2() >= cfg.t2() * cfg.k1() ? Side::SaturateX : Side::SaturateY;
}

int layer_limit(const SystemConfig& cfg) {
  auto ceil_div = [](int p, int q) { return (p + q - 1) / q; };
  if (saturated_side(cfg) == Side::SaturateX) return ceil_div(cfg.t2() * (cfg.k1() - cfg.t1()), cfg.k2() - cfg.t2());
  return ceil_div(cfg.t1() * (cfg.k2() - cfg.t2()), cfg.k1() - cfg.t1());
}

RestrictedGraph restrict_subgraph(const SubPacketUniverse& universe, const DeliveryVertices& v) {
  const SystemConfig& cfg = universe.config();
  RestrictedGraph r;
  r.side = saturated_side(cfg);
  r.layer_limit = layer_limit(cfg);
  const bool saturate_x = r.side == Side::SaturateX;
  const std::size_t left_n = saturate_x ? v.x.size() : v.y.size();
  const std::size_t right_full = saturate_x ? v.y.size() : v.x.size();

  std::vector<std::int64_t> local(right_full, -1);
  for (std::size_t j = 0; j < right_full; ++j) {
    const int layer = saturate_x ? v.y[j].l1 : v.x[j].l2;
    if (layer < r.layer_limit) {
      local[j] = static_cast<std::int64_t>(r.right_ids.size());
      r.right_ids.push_back(static_cast<std::uint32_t>(j));
    }
  }

  std::vector<std::vector<std::uint32_t>> adjacency(left_n);
  r.left_ids.resize(left_n);
  for (std::size_t i = 0; i < left_n; ++i) {
    r.left_ids[i] = static_cast<std::uint32_t>(i);
    const auto full = saturate_x ? x_neighbors(universe, v, static_cast<std::uint32_t>(i), r.layer_limit)
                                 : y_neighbors(universe, v, static_cast<std::uint32_t>(i), r.layer_limit);
    auto& list = adjacency[i];
    list.reserve(full.size());
    for (std::uint32_t j : full) list.push_back(static_cast<std::uint32_t>(local[j]));
  }
  r.graph = BipartiteGraph(r.right_ids.size(), std::move(adjacency));
  return r;
}

Matching saturating_matching(const RestrictedGraph& restricted) {
  Matching m = hopcroft_karp(restricted.graph);
  if (m.size != restricted.graph.left_size()) {
    throw SaturationFailure("maximum matching of size " + std::to_string(m.size) + " does not saturate the " +
                            (restricted.side == Side::SaturateX ? std::string("X") : std::string("Y")) +
                            " side of size " + std::to_string(restricted.graph.left_size()));
  }
  return m;
}

}  // namespace codedcache
