#include <doctest.h>

#include <random>

#include "codedcache/errors.hpp"
#include "codedcache/matching.hpp"

using namespace codedcache;

namespace {

// Plain augmenting-path matching, used only as a reference size.
struct Kuhn {
  const std::vector<std::vector<std::uint32_t>>& adj;
  std::vector<int> match_right;
  std::vector<char> seen;

  bool augment(std::size_t u) {
    for (auto v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || augment(std::size_t(match_right[v]))) {
        match_right[v] = int(u);
        return true;
      }
    }
    return false;
  }

  std::size_t run(std::size_t right) {
    match_right.assign(right, -1);
    std::size_t size = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      seen.assign(right, 0);
      size += augment(u);
    }
    return size;
  }
};

}  // namespace

TEST_CASE("hopcroft-karp agrees with a reference on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t left = rng() % 40;
    const std::size_t right = 1 + rng() % 40;
    const double p = double(rng() % 100) / 400.0;
    std::bernoulli_distribution edge(p);
    std::vector<std::vector<std::uint32_t>> adj(left);
    for (auto& row : adj)
      for (std::uint32_t v = 0; v < right; ++v)
        if (edge(rng)) row.push_back(v);
    const BipartiteGraph g(right, adj);
    const Matching m = hopcroft_karp(g);
    CHECK(is_valid_matching(g, m));
    Kuhn k{adj, {}, {}};
    CHECK(m.size == k.run(right));
    CHECK(m.edges().size() == m.size);
  }
}

TEST_CASE("hopcroft-karp finds perfect matchings that greedy misses") {
  // greedy in index order takes (0,0) and strands left vertex 1
  const BipartiteGraph g(2, {{0, 1}, {0}});
  const Matching m = hopcroft_karp(g);
  CHECK(m.size == 2);
  CHECK(m.left_to_right[1] == 0);
  CHECK(m.left_to_right[0] == 1);
}

TEST_CASE("graph construction") {
  const BipartiteGraph g(3, {{2, 0, 2}, {}, {1}});
  CHECK(g.left_size() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.neighbors(0).size() == 2);
  CHECK(g.neighbors(0)[0] == 0);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 1));
  CHECK(g.right_degrees() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK_THROWS_AS(BipartiteGraph(2, {{2}}), RangeError);

  const BipartiteGraph empty;
  CHECK(hopcroft_karp(empty).size == 0);
}

TEST_CASE("invalid matchings are detected") {
  const BipartiteGraph g(2, {{0, 1}, {0}});
  Matching m = hopcroft_karp(g);
  CHECK(is_valid_matching(g, m));
  Matching bad = m;
  bad.left_to_right[0] = 0;  // both left vertices on right 0
  CHECK_FALSE(is_valid_matching(g, bad));
  Matching non_edge = m;
  non_edge.left_to_right = {0, 1};
  non_edge.right_to_left = {0, 1};
  CHECK_FALSE(is_valid_matching(g, non_edge));
}
