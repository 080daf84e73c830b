#include "wiremono/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wiremono {

namespace {

void check_rank(int n) {
  if (n < 1) {
    throw std::invalid_argument("diagram rank must be at least 1, got " + std::to_string(n));
  }
}

}  // namespace

Matching Matching::identity(int n) {
  check_rank(n);
  std::vector<int32_t> partner(static_cast<size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    partner[static_cast<size_t>(k)] = static_cast<int32_t>(n + k);
    partner[static_cast<size_t>(n + k)] = static_cast<int32_t>(k);
  }
  return Matching(n, std::move(partner));
}

Matching Matching::from_pairs(int n, const std::vector<std::pair<int, int>>& blocks) {
  check_rank(n);
  if (blocks.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("matching of rank " + std::to_string(n) + " needs exactly " +
                                std::to_string(n) + " wires, got " + std::to_string(blocks.size()));
  }
  std::vector<int32_t> partner(static_cast<size_t>(2 * n), -1);
  for (const auto& [p, q] : blocks) {
    if (p < 0 || q < 0 || p >= 2 * n || q >= 2 * n) {
      throw std::invalid_argument("wire endpoint out of range");
    }
    if (p == q) {
      throw std::invalid_argument("wire may not join a point to itself");
    }
    if (partner[static_cast<size_t>(p)] != -1 || partner[static_cast<size_t>(q)] != -1) {
      throw std::invalid_argument("point used by more than one wire");
    }
    partner[static_cast<size_t>(p)] = static_cast<int32_t>(q);
    partner[static_cast<size_t>(q)] = static_cast<int32_t>(p);
  }
  return Matching(n, std::move(partner));
}

Matching Matching::star() const {
  std::vector<int32_t> partner(partner_.size());
  const int m = points();
  for (int p = 0; p < m; ++p) {
    const int ps = (p + n_) % m;
    partner[static_cast<size_t>(ps)] = static_cast<int32_t>((partner_[static_cast<size_t>(p)] + n_) % m);
  }
  return Matching(n_, std::move(partner));
}

int Matching::through_count() const {
  int t = 0;
  for (int p = 0; p < n_; ++p) {
    if (partner(p) >= n_) ++t;
  }
  return t;
}

WireProfile wire_profile(const Matching& a) {
  WireProfile w;
  const int n = a.n();
  for (int p = 0; p < 2 * n; ++p) {
    const int q = a.partner(p);
    if (q < p) continue;
    if (q < n) {
      w.left_arcs.emplace_back(p, q);
    } else if (p >= n) {
      w.right_arcs.emplace_back(p, q);
    } else {
      ++w.through_count;
    }
  }
  return w;  // arcs come out sorted because p scans upward
}

BrauerProduct brauer_multiply(const Matching& a, const Matching& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("cannot multiply diagrams of ranks " + std::to_string(a.n()) +
                                " and " + std::to_string(b.n()));
  }
  const int n = a.n();

  // Walk each strand through the glued middle layer. Middle point u is a's
  // right point n+u and b's left point u at once.
  std::vector<char> mid_seen(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> blocks;
  blocks.reserve(static_cast<size_t>(n));

  // Product points: left points are a's left points, right points are b's
  // right points, so both sides keep their 0..2n-1 indices.
  auto trace = [&](int start) {
    bool in_a = start < n;
    int p = start;
    for (;;) {
      const Matching& f = in_a ? a : b;
      const int q = f.partner(p);
      if (in_a) {
        if (q < n) return q;  // exits on a's left side
        mid_seen[static_cast<size_t>(q - n)] = 1;
        in_a = false;
        p = q - n;  // a's right point u' meets b's left point u
      } else {
        if (q >= n) return q;  // exits on b's right side
        mid_seen[static_cast<size_t>(q)] = 1;
        in_a = true;
        p = q + n;  // b's left point u meets a's right point u'
      }
    }
  };

  std::vector<char> done(static_cast<size_t>(2 * n), 0);
  for (int start = 0; start < 2 * n; ++start) {
    if (done[static_cast<size_t>(start)]) continue;
    const int end = trace(start);
    done[static_cast<size_t>(start)] = 1;
    done[static_cast<size_t>(end)] = 1;
    blocks.emplace_back(start, end);
  }

  // Unvisited middle points lie on closed loops; each loop is one circle.
  int circles = 0;
  for (int u = 0; u < n; ++u) {
    if (mid_seen[static_cast<size_t>(u)]) continue;
    ++circles;
    int p = u;
    do {
      mid_seen[static_cast<size_t>(p)] = 1;
      const int v = b.partner(p);          // left arc of b
      p = a.partner(v + n) - n;            // right arc of a, back to middle
      mid_seen[static_cast<size_t>(v)] = 1;
    } while (p != u);
  }

  return BrauerProduct{Matching::from_pairs(n, blocks), circles};
}

SetPartition SetPartition::identity(int n) { return of(Matching::identity(n)); }

SetPartition SetPartition::singletons(int n) {
  check_rank(n);
  SetPartition p;
  p.n_ = n;
  p.block_count_ = 2 * n;
  p.block_id_.resize(static_cast<size_t>(2 * n));
  std::iota(p.block_id_.begin(), p.block_id_.end(), 0);
  return p;
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  check_rank(n);
  std::vector<int32_t> raw(static_cast<size_t>(2 * n), -1);
  int id = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    for (int p : block) {
      if (p < 0 || p >= 2 * n) throw std::invalid_argument("block member out of range");
      if (raw[static_cast<size_t>(p)] != -1) throw std::invalid_argument("point in two blocks");
      raw[static_cast<size_t>(p)] = static_cast<int32_t>(id);
    }
    ++id;
  }
  for (int p = 0; p < 2 * n; ++p) {
    if (raw[static_cast<size_t>(p)] == -1) {
      throw std::invalid_argument("point " + point_name(p, n) + " missing from partition");
    }
  }
  // canonical renumbering by least member
  SetPartition out;
  out.n_ = n;
  out.block_id_.assign(static_cast<size_t>(2 * n), -1);
  std::vector<int32_t> rename(static_cast<size_t>(id), -1);
  int next = 0;
  for (int p = 0; p < 2 * n; ++p) {
    const int32_t r = raw[static_cast<size_t>(p)];
    if (rename[static_cast<size_t>(r)] == -1) rename[static_cast<size_t>(r)] = next++;
    out.block_id_[static_cast<size_t>(p)] = rename[static_cast<size_t>(r)];
  }
  out.block_count_ = next;
  return out;
}

SetPartition SetPartition::of(const Matching& m) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<size_t>(m.n()));
  for (int p = 0; p < m.points(); ++p) {
    const int q = m.partner(p);
    if (q > p) blocks.push_back({p, q});
  }
  return from_blocks(m.n(), blocks);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(block_count_));
  for (int p = 0; p < points(); ++p) {
    out[static_cast<size_t>(block_id_[static_cast<size_t>(p)])].push_back(p);
  }
  return out;
}

bool SetPartition::is_matching() const {
  std::vector<int> sizes(static_cast<size_t>(block_count_), 0);
  for (int32_t b : block_id_) ++sizes[static_cast<size_t>(b)];
  return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
}

Matching SetPartition::to_matching() const {
  if (!is_matching()) {
    throw std::invalid_argument("partition has a block of size != 2, not a matching");
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> first(static_cast<size_t>(block_count_), -1);
  for (int p = 0; p < points(); ++p) {
    int32_t b = block_id_[static_cast<size_t>(p)];
    if (first[static_cast<size_t>(b)] == -1) {
      first[static_cast<size_t>(b)] = p;
    } else {
      pairs.emplace_back(first[static_cast<size_t>(b)], p);
    }
  }
  return Matching::from_pairs(n_, pairs);
}

bool is_partial_brauer(const SetPartition& p) {
  std::vector<int> sizes(static_cast<size_t>(p.block_count()), 0);
  for (int q = 0; q < p.points(); ++q) {
    if (++sizes[static_cast<size_t>(p.block_of(q))] > 2) return false;
  }
  return true;
}

namespace {

// minimal union-find over a fixed range
class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(static_cast<size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) { parent_[static_cast<size_t>(find(x))] = find(y); }

 private:
  std::vector<int32_t> parent_;
};

}  // namespace

PartitionProduct partition_multiply(const SetPartition& a, const SetPartition& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("cannot multiply partitions of ranks " + std::to_string(a.n()) +
                                " and " + std::to_string(b.n()));
  }
  const int n = a.n();
  // layered node ids: 0..n-1 outer left, n..2n-1 middle, 2n..3n-1 outer right;
  // a's points land on layers 0 and 1, b's on layers 1 and 2
  UnionFind glue(3 * n);
  {
    std::vector<int> first_a(static_cast<size_t>(a.block_count()), -1);
    for (int p = 0; p < 2 * n; ++p) {
      int32_t blk = a.block_of(p);
      if (first_a[static_cast<size_t>(blk)] == -1) {
        first_a[static_cast<size_t>(blk)] = p;
      } else {
        glue.unite(first_a[static_cast<size_t>(blk)], p);
      }
    }
    std::vector<int> first_b(static_cast<size_t>(b.block_count()), -1);
    for (int p = 0; p < 2 * n; ++p) {
      int32_t blk = b.block_of(p);
      const int node = p + n;  // shift b's points onto layers 1 and 2
      if (first_b[static_cast<size_t>(blk)] == -1) {
        first_b[static_cast<size_t>(blk)] = node;
      } else {
        glue.unite(first_b[static_cast<size_t>(blk)], node);
      }
    }
  }

  // circles: middle components with no outer member
  std::vector<char> root_has_outer(static_cast<size_t>(3 * n), 0);
  for (int p = 0; p < n; ++p) root_has_outer[static_cast<size_t>(glue.find(p))] = 1;
  for (int p = 2 * n; p < 3 * n; ++p) root_has_outer[static_cast<size_t>(glue.find(p))] = 1;
  int circles = 0;
  std::vector<char> counted(static_cast<size_t>(3 * n), 0);
  for (int p = n; p < 2 * n; ++p) {
    const int r = glue.find(p);
    if (!root_has_outer[static_cast<size_t>(r)] && !counted[static_cast<size_t>(r)]) {
      counted[static_cast<size_t>(r)] = 1;
      ++circles;
    }
  }

  // restrict to outer points: product point p is node p (left) or p+n (right)
  std::vector<int32_t> root_block(static_cast<size_t>(3 * n), -1);
  std::vector<std::vector<int>> blocks;
  for (int p = 0; p < 2 * n; ++p) {
    const int node = p < n ? p : p + n;
    const int r = glue.find(node);
    if (root_block[static_cast<size_t>(r)] == -1) {
      root_block[static_cast<size_t>(r)] = static_cast<int32_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<size_t>(root_block[static_cast<size_t>(r)])].push_back(p);
  }
  return PartitionProduct{SetPartition::from_blocks(n, blocks), circles};
}

std::vector<Matching> all_matchings(int n) {
  check_rank(n);
  std::vector<Matching> out;
  std::vector<std::pair<int, int>> partial;
  std::vector<char> used(static_cast<size_t>(2 * n), 0);

  auto rec = [&](auto&& self) -> void {
    int p = 0;
    while (p < 2 * n && used[static_cast<size_t>(p)]) ++p;
    if (p == 2 * n) {
      out.push_back(Matching::from_pairs(n, partial));
      return;
    }
    used[static_cast<size_t>(p)] = 1;
    for (int q = p + 1; q < 2 * n; ++q) {
      if (used[static_cast<size_t>(q)]) continue;
      used[static_cast<size_t>(q)] = 1;
      partial.emplace_back(p, q);
      self(self);
      partial.pop_back();
      used[static_cast<size_t>(q)] = 0;
    }
    used[static_cast<size_t>(p)] = 0;
  };
  rec(rec);
  return out;
}

size_t MatchingHash::operator()(const Matching& a) const {
  size_t h = 0xcbf29ce484222325ull;
  for (int32_t v : a.partner_array()) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

size_t SetPartitionHash::operator()(const SetPartition& p) const {
  size_t h = 0x84222325cbf29ce4ull;
  for (int32_t v : p.block_id_array()) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace wiremono
