#ifndef WIREMONO_REDUCTION_HPP_
#define WIREMONO_REDUCTION_HPP_

#include <span>
#include <vector>

#include "wiremono/green.hpp"
#include "wiremono/identity.hpp"

namespace wiremono {

// Hard limit on constructed word lengths. Defaults to 10^7 letters; the
// WIREMONO_MAX_WORD_LEN environment variable overrides it. Exceeding a cap
// is an error, never a silent truncation.
size_t word_length_cap();

/// Freely reduced word in the free group: letter +i is the i-th generator,
/// -i its inverse.
struct GroupWord {
  std::vector<int> letters;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const GroupWord&) const = default;
};

GroupWord free_reduce(const GroupWord& w);
GroupWord group_inverse(const GroupWord& w);
GroupWord group_concat(const GroupWord& a, const GroupWord& b);
std::string format_group_word(const GroupWord& w, const std::vector<std::string>& names = {});

// substitute images[i-1] for letter i (its inverse for -i) and reduce
GroupWord substitute(const GroupWord& w, std::span<const GroupWord> images, size_t cap = 0);
GroupWord substitute(const Word& w, std::span<const GroupWord> images, size_t cap = 0);

// The m seed words: every letter occurs in each of them, all start and end
// with the first letter, and all but the last one square one letter.
std::vector<Word> seed_words(int m);

// length of the k-fold substitution image of letter i, by the recurrence
unsigned long long phi_power_length(int m, int k, int i);

// w_{i,k}: the k-fold image of letter i under the seed substitution
Word phi_power(int m, int k, int i, size_t cap = 0);
std::vector<Word> phi_power_all(int m, int k, size_t cap = 0);

/// Everything the reduction to rank n fixes in advance: the number of
/// J-classes of the signed monoid and the iteration exponent (twice that).
struct ReductionPlan {
  int m = 0;
  int n = 0;
  int j_classes = 0;
  int exponent = 0;

  static ReductionPlan make(int m, int n);
};

// Substitute the exponent-fold seed images into both sides of u = v. The
// result holds in the rank-n twisted Brauer monoids iff u = v holds in
// S_n x Z, and its length stays within max(|u|,|v|) * (m+2)^exponent.
Identity build_reduced_identity(const Identity& id, int n, size_t cap = 0);

// one-step inverses: images of the letters under the inverse of the seed
// substitution, m >= 2 (at m = 1 the substitution is not invertible)
std::vector<GroupWord> phi_inverse_basis(int m);
GroupWord phi_group(int m, const GroupWord& w, size_t cap = 0);
GroupWord phi_inverse(int m, const GroupWord& w, size_t cap = 0);

// exponent-fold inverse images g_i; substituting the w_{j,exponent} back
// into g_i is verified to reduce to the single letter i
std::vector<GroupWord> phi_inverse_words(int m, int n, size_t cap = 0);

struct TrapResult {
  SubgroupDescriptor subgroup;
  std::vector<TwistedElement> members;  // values of the w_{i,exponent}
};

// Evaluate the w_{i,exponent} under the substitution and certify that all
// the values land in one group H-class. Failure here contradicts the
// subgroup-trapping guarantee and is reported as a logic error.
TrapResult subgroup_trap(MonoidKind kind, const Substitution& sub, int m);

// From permutations h_1..h_m of degree n separating u and v in S_n, build
// the substitution letter i -> g_i(h_1..h_m) (as a diagram with 0 circles);
// it separates the built identity U = V in the rank-n twisted Brauer monoid.
Substitution lift_counterexample(int n, const Identity& id, const std::vector<Perm>& witness);

}  // namespace wiremono

#endif  // WIREMONO_REDUCTION_HPP_
