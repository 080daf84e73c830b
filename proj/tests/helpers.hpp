#ifndef WIREMONO_TESTS_HELPERS_HPP_
#define WIREMONO_TESTS_HELPERS_HPP_

#include <queue>
#include <random>
#include <vector>

#include "doctest.h"
#include "wiremono/diagram.hpp"

namespace wiremono::testing {

// uniformly random perfect matching: keep pairing the least free point
inline Matching random_matching(int n, std::mt19937_64& rng) {
  std::vector<int> free;
  for (int p = 0; p < 2 * n; ++p) free.push_back(p);
  std::vector<std::pair<int, int>> pairs;
  while (!free.empty()) {
    const int p = free.front();
    free.erase(free.begin());
    std::uniform_int_distribution<size_t> pick(0, free.size() - 1);
    const size_t j = pick(rng);
    pairs.emplace_back(p, free[j]);
    free.erase(free.begin() + static_cast<long>(j));
  }
  return Matching::from_pairs(n, pairs);
}

inline SetPartition random_set_partition(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2 * n - 1);
  std::vector<std::vector<int>> buckets(static_cast<size_t>(2 * n));
  for (int p = 0; p < 2 * n; ++p) buckets[static_cast<size_t>(pick(rng))].push_back(p);
  std::vector<std::vector<int>> blocks;
  for (auto& b : buckets) {
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return SetPartition::from_blocks(n, blocks);
}

// partial matching with singletons allowed: pair some points, leave the rest
inline SetPartition random_partial_brauer(int n, std::mt19937_64& rng) {
  std::vector<int> free;
  for (int p = 0; p < 2 * n; ++p) free.push_back(p);
  std::vector<std::vector<int>> blocks;
  while (!free.empty()) {
    const int p = free.front();
    free.erase(free.begin());
    if (free.empty() || rng() % 3 == 0) {
      blocks.push_back({p});
      continue;
    }
    std::uniform_int_distribution<size_t> pick(0, free.size() - 1);
    const size_t j = pick(rng);
    blocks.push_back({p, free[j]});
    free.erase(free.begin() + static_cast<long>(j));
  }
  return SetPartition::from_blocks(n, blocks);
}

// Independent product oracle: build the glued two-factor graph explicitly
// and read connected components off a BFS. Nodes 0..n-1 are a's left
// points, n..2n-1 the shared middle, 2n..3n-1 b's right points.
struct OracleProduct {
  Matching diagram;
  int circles = 0;
};

inline OracleProduct closure_brauer_product(const Matching& a, const Matching& b) {
  const int n = a.n();
  std::vector<std::vector<int>> adj(static_cast<size_t>(3 * n));
  auto edge = [&adj](int x, int y) {
    adj[static_cast<size_t>(x)].push_back(y);
    adj[static_cast<size_t>(y)].push_back(x);
  };
  for (int p = 0; p < 2 * n; ++p) {
    const int q = a.partner(p);
    if (q > p) edge(p, q);  // a's points already sit on layers 0 and 1
  }
  for (int p = 0; p < 2 * n; ++p) {
    const int q = b.partner(p);
    if (q > p) edge(p + n, q + n);  // shift b onto layers 1 and 2
  }

  std::vector<int> component(static_cast<size_t>(3 * n), -1);
  int comp_count = 0;
  for (int start = 0; start < 3 * n; ++start) {
    if (component[static_cast<size_t>(start)] != -1) continue;
    std::queue<int> todo;
    todo.push(start);
    component[static_cast<size_t>(start)] = comp_count;
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (component[static_cast<size_t>(w)] == -1) {
          component[static_cast<size_t>(w)] = comp_count;
          todo.push(w);
        }
      }
    }
    ++comp_count;
  }

  std::vector<std::vector<int>> outer(static_cast<size_t>(comp_count));
  for (int p = 0; p < n; ++p) outer[static_cast<size_t>(component[static_cast<size_t>(p)])].push_back(p);
  for (int p = 2 * n; p < 3 * n; ++p) {
    outer[static_cast<size_t>(component[static_cast<size_t>(p)])].push_back(p - n);
  }
  std::vector<std::pair<int, int>> pairs;
  int circles = 0;
  std::vector<char> has_mid(static_cast<size_t>(comp_count), 0);
  for (int p = n; p < 2 * n; ++p) has_mid[static_cast<size_t>(component[static_cast<size_t>(p)])] = 1;
  for (int c = 0; c < comp_count; ++c) {
    const auto& pts = outer[static_cast<size_t>(c)];
    if (pts.empty()) {
      circles += has_mid[static_cast<size_t>(c)] ? 1 : 0;
    } else {
      // for matchings every component meets the outside in exactly 0 or 2 points
      REQUIRE(pts.size() == 2);
      pairs.emplace_back(pts[0], pts[1]);
    }
  }
  return OracleProduct{Matching::from_pairs(n, pairs), circles};
}

// The six-step partition product done naively: explicit relabelling to a
// third layer, BFS transitive closure, middle-block census, restriction.
struct OraclePartitionProduct {
  SetPartition partition;
  int circles = 0;
};

inline OraclePartitionProduct closure_partition_product(const SetPartition& a, const SetPartition& b) {
  const int n = a.n();
  std::vector<std::vector<int>> adj(static_cast<size_t>(3 * n));
  auto edge = [&adj](int x, int y) {
    adj[static_cast<size_t>(x)].push_back(y);
    adj[static_cast<size_t>(y)].push_back(x);
  };
  // join consecutive members of every block
  {
    std::vector<int> prev(static_cast<size_t>(a.block_count()), -1);
    for (int p = 0; p < 2 * n; ++p) {
      int& q = prev[static_cast<size_t>(a.block_of(p))];
      if (q != -1) edge(q, p);
      q = p;
    }
  }
  {
    std::vector<int> prev(static_cast<size_t>(b.block_count()), -1);
    for (int p = 0; p < 2 * n; ++p) {
      int& q = prev[static_cast<size_t>(b.block_of(p))];
      if (q != -1) edge(q, p + n);
      q = p + n;  // b's points shift onto layers 1 and 2
    }
  }
  std::vector<int> component(static_cast<size_t>(3 * n), -1);
  int comp_count = 0;
  for (int start = 0; start < 3 * n; ++start) {
    if (component[static_cast<size_t>(start)] != -1) continue;
    std::queue<int> todo;
    todo.push(start);
    component[static_cast<size_t>(start)] = comp_count;
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (component[static_cast<size_t>(w)] == -1) {
          component[static_cast<size_t>(w)] = comp_count;
          todo.push(w);
        }
      }
    }
    ++comp_count;
  }
  std::vector<char> has_outer(static_cast<size_t>(comp_count), 0);
  std::vector<char> has_mid(static_cast<size_t>(comp_count), 0);
  for (int p = 0; p < n; ++p) has_outer[static_cast<size_t>(component[static_cast<size_t>(p)])] = 1;
  for (int p = n; p < 2 * n; ++p) has_mid[static_cast<size_t>(component[static_cast<size_t>(p)])] = 1;
  for (int p = 2 * n; p < 3 * n; ++p) has_outer[static_cast<size_t>(component[static_cast<size_t>(p)])] = 1;
  int circles = 0;
  for (int c = 0; c < comp_count; ++c) {
    if (has_mid[static_cast<size_t>(c)] && !has_outer[static_cast<size_t>(c)]) ++circles;
  }
  std::vector<std::vector<int>> blocks(static_cast<size_t>(comp_count));
  for (int p = 0; p < 2 * n; ++p) {
    const int node = p < n ? p : p + n;
    blocks[static_cast<size_t>(component[static_cast<size_t>(node)])].push_back(p);
  }
  std::vector<std::vector<int>> nonempty;
  for (auto& blk : blocks) {
    if (!blk.empty()) nonempty.push_back(std::move(blk));
  }
  return OraclePartitionProduct{SetPartition::from_blocks(n, nonempty), circles};
}

}  // namespace wiremono::testing

#endif  // WIREMONO_TESTS_HELPERS_HPP_
