#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "codedcache/matching.hpp"
#include "codedcache/subpacket.hpp"

namespace codedcache {

/// X^{(l2,m1)}_{S1,B}: XOR of the t1 sub-packets requested by the members of
/// S1 other than its m1-th smallest, all indexed by group-2 set B.
struct XVertex {
  UserSet s1;
  UserSet b;
  int l2 = 0;
  int m1 = 0;
  std::vector<SubPacketId> constituents;

  /// S1 without its m1-th smallest member.
  UserSet reduced() const { return s1.without(s1.nth(m1)); }
};

/// Y^{(m2,l1)}_{A,S2}: mirror of XVertex over group 2.
struct YVertex {
  UserSet a;
  UserSet s2;
  int m2 = 0;
  int l1 = 0;
  std::vector<SubPacketId> constituents;

  UserSet reduced() const { return s2.without(s2.nth(m2)); }
};

std::string to_string(const XVertex& x);
std::string to_string(const YVertex& y);

/// Vertices ordered lexicographically by (S1, B, l2, m1);
/// C(K1,t1+1) * C(K2,t2) * t2 * (t1+1) of them.
std::vector<XVertex> build_x_vertices(const SubPacketUniverse& universe, const DemandVector& demand);
/// Vertices ordered lexicographically by (A, S2, l1, m2);
/// C(K2,t2+1) * C(K1,t1) * t1 * (t2+1) of them.
std::vector<YVertex> build_y_vertices(const SubPacketUniverse& universe, const DemandVector& demand);

/// Positions of vertices in the canonical orders above.
class VertexIndex {
 public:
  explicit VertexIndex(const SubPacketUniverse& universe) : universe_(&universe) {}

  std::uint32_t x(UserSet s1, UserSet b, int l2, int m1) const;
  std::uint32_t y(UserSet a, UserSet s2, int l1, int m2) const;

 private:
  const SubPacketUniverse* universe_;
};

/// Both vertex families of one configuration and demand.
struct DeliveryVertices {
  std::vector<XVertex> x;
  std::vector<YVertex> y;
};

/// Y neighbours of X vertex `xi` whose layer l1 < l1_limit, ascending. An
/// edge exists iff S1 minus its m1-th member equals A and S2 minus its m2-th
/// member equals B; layers are unconstrained.
std::vector<std::uint32_t> x_neighbors(const SubPacketUniverse& universe, const DeliveryVertices& v,
                                       std::uint32_t xi, int l1_limit);
/// X neighbours of Y vertex `yi` whose layer l2 < l2_limit, ascending.
std::vector<std::uint32_t> y_neighbors(const SubPacketUniverse& universe, const DeliveryVertices& v,
                                       std::uint32_t yi, int l2_limit);

/// The full graph G with left side X and right side Y.
BipartiteGraph build_edges(const SubPacketUniverse& universe, const DeliveryVertices& v);

enum class Side { SaturateX, SaturateY };
std::string to_string(Side side);

/// The induced subgraph used for matching. For SaturateX the left side is all
/// of X and the right side is Y' = {y : l1 < L}; for SaturateY the left side is
/// all of Y and the right side is X' = {x : l2 < L}.
struct RestrictedGraph {
  Side side = Side::SaturateX;
  int layer_limit = 0;                   // L
  std::vector<std::uint32_t> left_ids;   // indices into X (SaturateX) or Y
  std::vector<std::uint32_t> right_ids;  // indices into Y' (SaturateX) or X'
  BipartiteGraph graph;                  // over local positions
};

/// Side selection: SaturateX when t1/K1 >= t2/K2 with L = ceil(t2(K1-t1)/(K2-t2)),
/// otherwise SaturateY with L = ceil(t1(K2-t2)/(K1-t1)).
Side saturated_side(const SystemConfig& cfg);
int layer_limit(const SystemConfig& cfg);

RestrictedGraph restrict_subgraph(const SubPacketUniverse& universe, const DeliveryVertices& v);

/// Maximum matching of the restricted graph; throws SaturationFailure when it
/// does not cover the whole left side.
Matching saturating_matching(const RestrictedGraph& restricted);

}  // namespace codedcache
