#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace codedcache {

/// Bipartite graph in compressed adjacency form. Left vertices are
/// 0..left_size()-1, right vertices 0..right_size()-1; every adjacency list is
/// sorted ascending and duplicate-free.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// `adjacency[u]` lists the right neighbours of left vertex u.
  BipartiteGraph(std::size_t right_size, std::vector<std::vector<std::uint32_t>> adjacency);

  std::size_t left_size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t right_size() const noexcept { return right_size_; }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  std::span<const std::uint32_t> neighbors(std::size_t left) const noexcept {
    return {targets_.data() + offsets_[left], targets_.data() + offsets_[left + 1]};
  }
  bool has_edge(std::size_t left, std::size_t right) const noexcept;
  /// Degrees of the right vertices.
  std::vector<std::uint32_t> right_degrees() const;

 private:
  std::size_t right_size_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> targets_;
};

inline constexpr std::int32_t kUnmatched = -1;

struct Matching {
  std::vector<std::int32_t> left_to_right;
  std::vector<std::int32_t> right_to_left;
  std::size_t size = 0;

  /// Matched (left, right) pairs in increasing left order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
};

/// Maximum-cardinality matching by Hopcroft-Karp phases (BFS layering, then
/// iterative DFS over sorted adjacency). The result is deterministic.
Matching hopcroft_karp(const BipartiteGraph& graph);

/// True when no two pairs share a vertex and every pair is an edge.
bool is_valid_matching(const BipartiteGraph& graph, const Matching& matching);

}  // namespace codedcache
