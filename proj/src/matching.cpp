#include "codedcache/matching.hpp"

#include <algorithm>
#include <limits>

#include "codedcache/errors.hpp"

namespace codedcache {

BipartiteGraph::BipartiteGraph(std::size_t right_size, std::vector<std::vector<std::uint32_t>> adjacency)
    : right_size_(right_size) {
  offsets_.reserve(adjacency.size() + 1);
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::uint32_t v : list) {
      if (v >= right_size) throw RangeError("edge endpoint " + std::to_string(v) + " beyond right side");
      targets_.push_back(v);
    }
    offsets_.push_back(targets_.size());
  }
}

bool BipartiteGraph::has_edge(std::size_t left, std::size_t right) const noexcept {
  if (left >= left_size()) return false;
  auto n = neighbors(left);
  return std::binary_search(n.begin(), n.end(), static_cast<std::uint32_t>(right));
}

std::vector<std::uint32_t> BipartiteGraph::right_degrees() const {
  std::vector<std::uint32_t> deg(right_size_, 0);
  for (std::uint32_t v : targets_) ++deg[v];
  return deg;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Matching::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(size);
  for (std::size_t u = 0; u < left_to_right.size(); ++u) {
    if (left_to_right[u] != kUnmatched) {
      out.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(left_to_right[u]));
    }
  }
  return out;
}

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        l2r_(g.left_size(), kUnmatched),
        r2l_(g.right_size(), kUnmatched),
        dist_(g.left_size(), kInf),
        next_(g.left_size(), 0) {}

  Matching run() {
    std::size_t size = 0;
    while (layer()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::size_t u = 0; u < g_.left_size(); ++u) {
        if (l2r_[u] == kUnmatched && augment(static_cast<std::uint32_t>(u))) ++size;
      }
    }
    return Matching{std::move(l2r_), std::move(r2l_), size};
  }

 private:
  // BFS from every free left vertex; true if some free right vertex is reachable.
  bool layer() {
    std::vector<std::uint32_t> queue;
    queue.reserve(g_.left_size());
    for (std::size_t u = 0; u < g_.left_size(); ++u) {
      if (l2r_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(static_cast<std::uint32_t>(u));
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      for (std::uint32_t v : g_.neighbors(u)) {
        const std::int32_t w = r2l_[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(w)] == kInf) {
          dist_[static_cast<std::size_t>(w)] = dist_[u] + 1;
          queue.push_back(static_cast<std::uint32_t>(w));
        }
      }
    }
    return found;
  }

  // Iterative DFS along the BFS layers. stack_[i] is a left vertex whose
  // current candidate edge is neighbors(u)[next_[u]].
  bool augment(std::uint32_t root) {
    stack_.clear();
    stack_.push_back(root);
    while (!stack_.empty()) {
      const std::uint32_t u = stack_.back();
      const auto adj = g_.neighbors(u);
      if (next_[u] >= adj.size()) {
        dist_[u] = kInf;
        stack_.pop_back();
        if (!stack_.empty()) ++next_[stack_.back()];
        continue;
      }
      const std::uint32_t v = adj[next_[u]];
      const std::int32_t w = r2l_[v];
      if (w == kUnmatched) {
        for (std::uint32_t x : stack_) {
          const std::uint32_t y = g_.neighbors(x)[next_[x]];
          l2r_[x] = static_cast<std::int32_t>(y);
          r2l_[y] = static_cast<std::int32_t>(x);
        }
        return true;
      }
      if (dist_[static_cast<std::size_t>(w)] == dist_[u] + 1) {
        stack_.push_back(static_cast<std::uint32_t>(w));
      } else {
        ++next_[u];
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<std::int32_t> l2r_;
  std::vector<std::int32_t> r2l_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> next_;
  std::vector<std::uint32_t> stack_;
};

}  // namespace

Matching hopcroft_karp(const BipartiteGraph& graph) {
  return HopcroftKarp(graph).run();
}

bool is_valid_matching(const BipartiteGraph& graph, const Matching& matching) {
  if (matching.left_to_right.size() != graph.left_size() || matching.right_to_left.size() != graph.right_size()) {
    return false;
  }
  std::size_t count = 0;
  for (std::size_t u = 0; u < graph.left_size(); ++u) {
    const std::int32_t v = matching.left_to_right[u];
    if (v == kUnmatched) continue;
    if (!graph.has_edge(u, static_cast<std::size_t>(v))) return false;
    if (matching.right_to_left[static_cast<std::size_t>(v)] != static_cast<std::int32_t>(u)) return false;
    ++count;
  }
  std::size_t right_count = 0;
  for (std::int32_t u : matching.right_to_left) right_count += u != kUnmatched;
  return count == matching.size && right_count == count;
}

}  // namespace codedcache
