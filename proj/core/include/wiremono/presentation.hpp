#ifndef WIREMONO_PRESENTATION_HPP_
#define WIREMONO_PRESENTATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wiremono/monoid.hpp"

namespace wiremono {

enum class RelationName {
  M1,     // t_i^2 = 1
  M2,     // t_i t_j = t_j t_i           |i-j| >= 2
  M3,     // t_i t_j t_i = t_j t_i t_j   |i-j| = 1
  C,      // c t_i = t_i c
  TL1,    // h_i h_j = h_j h_i           |i-j| >= 2
  TL2,    // h_i h_j h_i = h_i           |i-j| = 1
  TL3a,   // h_i^2 = c h_i
  TL3b,   // h_i^2 = h_i c
  Mix1a,  // h_i t_i = h_i
  Mix1b,  // t_i h_i = h_i
  Mix2,   // h_i t_j = t_j h_i           |i-j| >= 2
  Mix3a,  // t_i h_j h_i = t_j h_i       |i-j| = 1
  Mix3b,  // h_i h_j t_i = h_i t_j       |i-j| = 1
  Inv     // cd = 1, dc = 1
};

std::string relation_name_str(RelationName name);

/// One defining relation instantiated at concrete indices. An empty rhs
/// stands for the identity element (M1 and Inv only).
struct RelationInstance {
  RelationName name;
  int i = 0;
  int j = 0;
  std::vector<GeneratorSymbol> lhs;
  std::vector<GeneratorSymbol> rhs;

  std::string label() const;  // e.g. "M3(2,1)"
  std::string str() const;    // e.g. "M3(2,1): t2 t1 t2 = t1 t2 t1"
};

// All instances over the valid index ranges for rank n. Commuting relations
// whose two orders read the same (M2, TL1) are emitted once per unordered
// pair; every other indexed family is emitted per ordered pair.
std::vector<RelationInstance> relation_suite(int n, bool include_d);

struct RelationFailure {
  RelationInstance instance;
  TwistedElement lhs_value;
  TwistedElement rhs_value;
};

struct RelationReport {
  int checked = 0;
  std::optional<RelationFailure> first_failure;
  bool all_hold() const { return !first_failure.has_value(); }
};

// Evaluate every instance in the given monoid; for signed kinds this also
// checks the derived commutations of d with t_i, h_i and c.
RelationReport verify_relations(MonoidKind kind);

// Evaluate one side of a relation (empty word = identity element).
TwistedElement evaluate_relation_side(MonoidKind kind, const std::vector<GeneratorSymbol>& side);

}  // namespace wiremono

#endif  // WIREMONO_PRESENTATION_HPP_
