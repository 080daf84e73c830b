#ifndef WIREMONO_GREEN_HPP_
#define WIREMONO_GREEN_HPP_

#include <optional>
#include <vector>

#include "wiremono/monoid.hpp"
#include "wiremono/perm.hpp"

namespace wiremono {

// Green's relations for the signed twisted Brauer monoid: two elements are
// L-related iff their diagrams share right arcs, R-related iff they share
// left arcs, J-related iff they have the same number of through wires.
// Only the pbt kinds are accepted; the unsigned monoid has a different
// (infinite-chain) J-order and is out of scope here.
bool l_related(const TwistedElement& x, const TwistedElement& y);
bool r_related(const TwistedElement& x, const TwistedElement& y);
bool h_related(const TwistedElement& x, const TwistedElement& y);
bool j_related(const TwistedElement& x, const TwistedElement& y);

// number of J-classes of the signed monoid of rank n: ceil((n+1)/2)
int j_class_count(int n);

// eta = (pi*; -2m - s) with m the arc count; satisfies x eta x = x
TwistedElement regular_witness(const TwistedElement& x);

/// An H-class that is a group, described by its idempotent (pi0; -<pi0,pi0>).
/// Members are coordinatized as (permutation of the idempotent's through
/// wires, integer circle offset).
struct SubgroupDescriptor {
  TwistedElement idempotent;
  int k = 0;                    // through-wire count
  long long s_offset = 0;       // the idempotent's circle count
  std::vector<int> free_left;   // left endpoints of the through wires, ascending
  std::vector<int> wire_right;  // wire_right[a] = right endpoint of wire a
};

// Returns the descriptor of the group H-class containing x, if the H-class
// of x's diagram contains an idempotent; nullopt otherwise.
std::optional<SubgroupDescriptor> find_idempotent_in_h_class(const TwistedElement& x);

struct SubgroupCoordinates {
  Perm perm;
  long long z = 0;
};

// Mutually inverse bijections between the H-class and S_k x Z. The wire
// labelling follows the idempotent's through wires ordered by left endpoint,
// so products compose left-to-right and z offsets add.
SubgroupCoordinates subgroup_coordinates(const SubgroupDescriptor& desc, const TwistedElement& x);
TwistedElement subgroup_element(const SubgroupDescriptor& desc, const SubgroupCoordinates& coords);

// group inverse within the H-class: x * inverse = idempotent
TwistedElement subgroup_inverse(const SubgroupDescriptor& desc, const TwistedElement& x);

/// Brute-force Green classification of the finite Brauer monoid of rank
/// n <= 4, built from the divisibility preorders by exhaustive products.
class GreenOracle {
 public:
  explicit GreenOracle(int n);

  int n() const { return n_; }
  const std::vector<Matching>& elements() const { return elements_; }
  int index_of(const Matching& m) const;

  bool l_related(int a, int b) const;
  bool r_related(int a, int b) const;
  bool h_related(int a, int b) const;
  bool j_related(int a, int b) const;

  int j_class_of(int a) const { return j_class_[static_cast<size_t>(a)]; }
  int j_class_count() const;
  std::vector<int> j_class_sizes() const;

 private:
  int n_ = 0;
  std::vector<Matching> elements_;
  std::vector<int> l_class_;
  std::vector<int> r_class_;
  std::vector<int> j_class_;
};

struct StabilityViolation {
  TwistedElement a;
  TwistedElement b;
  bool left_side = false;  // true: the (a, ba) implication failed
};

struct StabilityReport {
  int samples = 0;
  std::vector<StabilityViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Random check of a J ab => a R ab and a J ba => a L ba on a signed kind.
StabilityReport stability_check(MonoidKind kind, int samples, uint64_t seed);

}  // namespace wiremono

#endif  // WIREMONO_GREEN_HPP_
