#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "codedcache/combinatorics.hpp"
#include "codedcache/delivery_graph.hpp"
#include "codedcache/errors.hpp"
#include "support.hpp"

using namespace codedcache;

namespace {

struct Built {
  SubPacketUniverse u;
  DemandVector d;
  DeliveryVertices v;
};

Built build(int k1, int k2, int t1, int t2, int n) {
  const auto cfg = validate_config(k1, k2, t1, t2, n);
  Built b{SubPacketUniverse(cfg), DemandVector::worst_case(cfg), {}};
  b.v.x = build_x_vertices(b.u, b.d);
  b.v.y = build_y_vertices(b.u, b.d);
  return b;
}

std::multiset<SubPacketId> as_set(const std::vector<SubPacketId>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("vertex counts and sample vertices for K1=4 K2=3 t1=3 t2=2") {
  auto b = build(4, 3, 3, 2, 7);
  CHECK(b.v.x.size() == 24);
  CHECK(b.v.y.size() == 36);

  // X with S1 = {0,1,2,3}, B = {5,6}, l2 = 0, m1 = 1 (user 1 left out)
  const VertexIndex idx(b.u);
  const auto B0 = UserSet::of({5, 6});
  const auto& x = b.v.x.at(idx.x(UserSet::of({0, 1, 2, 3}), B0, 0, 1));
  CHECK(as_set(x.constituents) == as_set({SubPacketId{0, UserSet::of({1, 2, 3}), B0, 0, 0},
                                          SubPacketId{2, UserSet::of({0, 1, 3}), B0, 1, 0},
                                          SubPacketId{3, UserSet::of({0, 1, 2}), B0, 1, 0}}));
  CHECK(x.reduced() == UserSet::of({0, 2, 3}));

  // Y with A = {1,2,3}, S2 = {4,5,6}, l1 = 2, m2 = 1 (user 5 left out)
  const auto A0 = UserSet::of({1, 2, 3});
  const auto& y = b.v.y.at(idx.y(A0, UserSet::of({4, 5, 6}), 2, 1));
  CHECK(as_set(y.constituents) ==
        as_set({SubPacketId{4, A0, UserSet::of({5, 6}), 2, 0}, SubPacketId{6, A0, UserSet::of({4, 5}), 2, 1}}));
  CHECK(y.reduced() == UserSet::of({4, 6}));

  // pairs with the Y vertex A = {0,2,3}, S2 = {4,5,6}, l1 = 0, m2 = 0
  const BipartiteGraph g = build_edges(b.u, b.v);
  CHECK(g.has_edge(idx.x(UserSet::of({0, 1, 2, 3}), B0, 0, 1), idx.y(UserSet::of({0, 2, 3}), UserSet::of({4, 5, 6}), 0, 0)));
  CHECK(g.edge_count() == 72);
}

TEST_CASE("vertex indices follow the canonical orders") {
  for (const auto& cfg : testsupport::grid(2, 5, 2, 4, 5)) {
    const SubPacketUniverse u(cfg);
    const auto d = DemandVector::worst_case(cfg);
    const auto xs = build_x_vertices(u, d);
    const auto ys = build_y_vertices(u, d);
    const VertexIndex idx(u);
    CHECK(xs.size() == binomial(cfg.k1(), cfg.t1() + 1) * binomial(cfg.k2(), cfg.t2()) * cfg.t2() * (cfg.t1() + 1));
    CHECK(ys.size() == binomial(cfg.k2(), cfg.t2() + 1) * binomial(cfg.k1(), cfg.t1()) * cfg.t1() * (cfg.t2() + 1));
    for (std::uint32_t i = 0; i < xs.size(); ++i) {
      REQUIRE(idx.x(xs[i].s1, xs[i].b, xs[i].l2, xs[i].m1) == i);
      CHECK(xs[i].constituents.size() == std::size_t(cfg.t1()));
    }
    for (std::uint32_t i = 0; i < ys.size(); ++i) {
      REQUIRE(idx.y(ys[i].a, ys[i].s2, ys[i].l1, ys[i].m2) == i);
      CHECK(ys[i].constituents.size() == std::size_t(cfg.t2()));
    }
  }
}

TEST_CASE("each requested uncached sub-packet lies in exactly one vertex") {
  // With distinct demands every sub-packet W_{d_k, A, B} with k outside A and
  // outside B appears once in X (k fixed) or once in Y (k mobile).
  for (const auto& cfg : testsupport::grid(2, 5, 2, 4, -1)) {
    const SubPacketUniverse u(cfg);
    const auto d = DemandVector::worst_case(cfg);
    std::map<SubPacketId, int> seen;
    for (const auto& x : build_x_vertices(u, d))
      for (const auto& id : x.constituents) ++seen[id];
    for (const auto& y : build_y_vertices(u, d))
      for (const auto& id : y.constituents) ++seen[id];
    std::size_t expected = 0;
    for (int k = 0; k < cfg.users(); ++k)
      for (std::uint64_t j = 0; j < u.per_file(); ++j) {
        const auto id = u.id_at(std::uint64_t(d[k]) * u.per_file() + j);
        const bool cached = k < cfg.k1() ? id.a.contains(k) : id.b.contains(k);
        if (cached) continue;
        ++expected;
        CHECK(seen[id] == 1);
      }
    CHECK(seen.size() == expected);
  }
}

TEST_CASE("edges match the pairwise definition and the degree formulas") {
  for (const auto& cfg : testsupport::grid(2, 4, 2, 4, 3)) {
    const SubPacketUniverse u(cfg);
    const auto d = DemandVector::worst_case(cfg);
    DeliveryVertices v{build_x_vertices(u, d), build_y_vertices(u, d)};
    const BipartiteGraph g = build_edges(u, v);
    std::size_t edges = 0;
    for (std::uint32_t i = 0; i < v.x.size(); ++i)
      for (std::uint32_t j = 0; j < v.y.size(); ++j) {
        const bool e = v.x[i].reduced() == v.y[j].a && v.y[j].reduced() == v.x[i].b;
        REQUIRE(g.has_edge(i, j) == e);
        edges += e;
      }
    CHECK(edges == g.edge_count());
    for (std::uint32_t i = 0; i < v.x.size(); ++i)
      CHECK(g.neighbors(i).size() == std::size_t((cfg.k2() - cfg.t2()) * cfg.t1()));
    for (auto deg : g.right_degrees()) CHECK(deg == std::uint32_t((cfg.k1() - cfg.t1()) * cfg.t2()));
  }
}

TEST_CASE("side selection and layer limit") {
  auto check = [](int k1, int k2, int t1, int t2, Side side, int L) {
    const auto cfg = validate_config(k1, k2, t1, t2, 7);
    CHECK(saturated_side(cfg) == side);
    CHECK(layer_limit(cfg) == L);
  };
  check(4, 3, 3, 2, Side::SaturateX, 2);
  check(4, 4, 2, 2, Side::SaturateX, 2);  // tie goes to X
  check(5, 4, 2, 3, Side::SaturateY, 1);
  check(2, 5, 1, 3, Side::SaturateY, 2);
  check(6, 5, 4, 2, Side::SaturateX, 2);
  check(6, 2, 5, 1, Side::SaturateX, 1);
  CHECK(to_string(Side::SaturateY) == "saturate-y");
}

TEST_CASE("restricted graph saturates the chosen side with the oracle's sizes") {
  struct Row {
    int k1, k2, t1, t2;
    std::size_t left, right;
  };
  // left/right sizes from the brute-force reference
  for (const Row& r : {Row{4, 3, 3, 2, 24, 24}, Row{5, 4, 2, 3, 80, 120}, Row{3, 5, 1, 4, 15, 30},
                       Row{6, 5, 4, 2, 600, 900}, Row{6, 4, 1, 3, 24, 120}, Row{2, 5, 1, 3, 40, 40}}) {
    CAPTURE(r.k1);
    CAPTURE(r.k2);
    auto b = build(r.k1, r.k2, r.t1, r.t2, 7);
    const RestrictedGraph rg = restrict_subgraph(b.u, b.v);
    CHECK(rg.left_ids.size() == r.left);
    CHECK(rg.right_ids.size() == r.right);
    const Matching m = saturating_matching(rg);
    CHECK(m.size == r.left);
    CHECK(is_valid_matching(rg.graph, m));
  }
}

TEST_CASE("the saturated side has the larger restricted degree") {
  // Regular bipartite graphs with left degree >= right degree always admit a
  // left-saturating matching; check the degree condition holds on the grid.
  for (const auto& cfg : testsupport::grid(2, 6, 2, 5, 7)) {
    const SubPacketUniverse u(cfg);
    const auto d = DemandVector::worst_case(cfg);
    DeliveryVertices v{build_x_vertices(u, d), build_y_vertices(u, d)};
    const RestrictedGraph rg = restrict_subgraph(u, v);
    std::size_t min_left = SIZE_MAX;
    for (std::size_t i = 0; i < rg.graph.left_size(); ++i) min_left = std::min(min_left, rg.graph.neighbors(i).size());
    const auto rd = rg.graph.right_degrees();
    const std::uint32_t max_right = rd.empty() ? 0 : *std::max_element(rd.begin(), rd.end());
    CHECK(min_left >= max_right);
    CHECK(saturating_matching(rg).size == rg.left_ids.size());
  }
}
