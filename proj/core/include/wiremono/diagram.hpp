#ifndef WIREMONO_DIAGRAM_HPP_
#define WIREMONO_DIAGRAM_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wiremono {

// Points of a rank-n diagram are indexed 0..2n-1: index k < n is the left
// point k+1, index n+k is the right point (k+1)'. The flat encoding keeps
// partner lookup O(1) and makes the prime-swap p -> (p+n) mod 2n.

/// Perfect matching on [n] u [n]': every block is a wire joining two points.
class Matching {
 public:
  // identity diagram: n horizontal wires {k, k'}
  static Matching identity(int n);

  // blocks as point-index pairs; must cover every point exactly once
  static Matching from_pairs(int n, const std::vector<std::pair<int, int>>& blocks);

  int n() const { return n_; }
  int points() const { return 2 * n_; }
  int partner(int p) const { return partner_[static_cast<size_t>(p)]; }

  bool is_left(int p) const { return p < n_; }
  bool is_right(int p) const { return p >= n_; }

  // reflection that swaps primed with unprimed endpoints of every wire
  Matching star() const;

  // count of left-right wires
  int through_count() const;

  bool operator==(const Matching&) const = default;

  const std::vector<int32_t>& partner_array() const { return partner_; }

 private:
  Matching(int n, std::vector<int32_t> partner) : n_(n), partner_(std::move(partner)) {}

  int n_ = 0;
  std::vector<int32_t> partner_;
};

// Wires of a matching split by side. Arcs are (min,max) point-index pairs,
// sorted; left arcs live in [0,n), right arcs in [n,2n).
struct WireProfile {
  std::vector<std::pair<int, int>> left_arcs;
  std::vector<std::pair<int, int>> right_arcs;
  int through_count = 0;
};

WireProfile wire_profile(const Matching& a);

struct BrauerProduct {
  Matching diagram;
  int circles = 0;  // closed loops glued from right arcs of a and left arcs of b
};

// Glue a's right points to b's left points and trace every strand.
BrauerProduct brauer_multiply(const Matching& a, const Matching& b);

/// Arbitrary partition of [n] u [n]', kept in canonical form: blocks are
/// numbered 0,1,2,... in order of their least point (left points before
/// right points).
class SetPartition {
 public:
  static SetPartition identity(int n);
  static SetPartition singletons(int n);
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartition of(const Matching& m);

  int n() const { return n_; }
  int points() const { return 2 * n_; }
  int block_of(int p) const { return block_id_[static_cast<size_t>(p)]; }
  int block_count() const { return block_count_; }
  std::vector<std::vector<int>> blocks() const;

  bool is_matching() const;  // every block has exactly 2 elements
  Matching to_matching() const;

  bool operator==(const SetPartition&) const = default;

  const std::vector<int32_t>& block_id_array() const { return block_id_; }

 private:
  SetPartition() = default;

  int n_ = 0;
  int block_count_ = 0;
  std::vector<int32_t> block_id_;  // canonical ids, one per point
};

/// True iff every block has at most two elements.
bool is_partial_brauer(const SetPartition& p);

struct PartitionProduct {
  SetPartition partition;
  int circles = 0;  // middle-layer blocks that touch no outer point
};

// Six-step product: relabel, close up over the shared middle layer,
// count the middle-only blocks, restrict to the outer points.
PartitionProduct partition_multiply(const SetPartition& a, const SetPartition& b);

// All (2n-1)!! matchings of rank n, in the order produced by always pairing
// the least free point first (deterministic).
std::vector<Matching> all_matchings(int n);

// --- canonical text and JSON forms -----------------------------------------
//
// Text: `n=3 [1 2][3 3'][1' 2']` -- blocks in canonical order, members
// ascending, right points suffixed with '. Parsing accepts blocks and
// members in any order and canonicalizes.
// JSON: {"n":3,"blocks":[["1","2"],["3","3'"],["1'","2'"]]}.

std::string point_name(int p, int n);
int parse_point_name(std::string_view text, int n);

std::string format_diagram(const Matching& a);
std::string format_diagram(const SetPartition& p);
SetPartition parse_diagram(std::string_view text);
Matching parse_matching(std::string_view text);

std::string diagram_to_json(const SetPartition& p);
std::string diagram_to_json(const Matching& a);
SetPartition diagram_from_json(std::string_view text);

struct MatchingHash {
  size_t operator()(const Matching& a) const;
};
struct SetPartitionHash {
  size_t operator()(const SetPartition& p) const;
};

}  // namespace wiremono

#endif  // WIREMONO_DIAGRAM_HPP_
