#ifndef WIREMONO_IDENTITY_HPP_
#define WIREMONO_IDENTITY_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wiremono/monoid.hpp"
#include "wiremono/perm.hpp"

namespace wiremono {

/// Semigroup word over letter ids 1..m.
struct Word {
  std::vector<int> letters;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  std::vector<int> alphabet() const;  // distinct ids, ascending

  bool operator==(const Word&) const = default;
};

/// A pair of words u = v, with display names for the letters. Letter id i
/// is shown as names[i-1] when present, else as x<i>.
struct Identity {
  Word lhs;
  Word rhs;
  std::vector<std::string> names;

  std::vector<int> alphabet() const;
  std::string letter_name(int id) const;
  std::string str() const;

  bool operator==(const Identity&) const = default;
};

// Grammar: letters are a..z or x<digits>; sides separated by '='; whitespace
// ignored. Ids are assigned in order of first appearance.
Identity parse_identity(std::string_view text);
Word parse_word(std::string_view text, std::vector<std::string>& names);

std::string format_word(const Word& w, const std::vector<std::string>& names = {});

// every letter occurs the same number of times on both sides
bool is_balanced(const Identity& id);

using Substitution = std::map<int, TwistedElement>;
using PermSubstitution = std::map<int, Perm>;

TwistedElement evaluate(const Word& w, const Substitution& sub);
Perm evaluate(const Word& w, const PermSubstitution& sub);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupCheck {
  bool holds = false;
  PermSubstitution counterexample;  // set iff !holds
};

// Exhaustive check over all tuples of degree-k permutations, k <= 5.
// Throws BudgetExceeded when k!^#letters exceeds the budget.
GroupCheck check_symmetric_group(int k, const Identity& id, long long budget = 10'000'000);

struct SnZCheck {
  enum class Status { Holds, Unbalanced, GroupCounterexample };
  Status status = Status::Holds;
  PermSubstitution counterexample;

  bool holds() const { return status == Status::Holds; }
};

// An identity holds in S_k x Z iff it is balanced and holds in S_k.
SnZCheck check_sn_times_z(int k, const Identity& id, long long budget = 10'000'000);

// the word w^(k!-1) w', equal to 1 in S_k exactly when w = w' holds there
Word unit_form_word(const Identity& id, int k, size_t cap = 0);

// v x = x v with x a fresh letter; balanced by construction
Identity centralize(const Word& v, const std::vector<std::string>& names = {});

struct SearchOptions {
  enum class Strategy { Random, ExhaustiveWords };
  Strategy strategy = Strategy::Random;
  long long budget = 10'000;
  uint64_t seed = 0;
  int max_word_len = 30;     // random strategy: generator-word length per letter
  int max_twist_power = 5;   // random strategy, signed kinds: extra (id; +-r) factor
  int exhaustive_max_len = 3;
  int threads = 1;
};

struct SearchResult {
  enum class Outcome { Counterexample, Exhausted };
  Outcome outcome = Outcome::Exhausted;
  std::optional<Substitution> witness;
  long long candidates_tried = 0;

  bool found() const { return outcome == Outcome::Counterexample; }
};

// Look for a substitution separating the two sides. A returned witness is
// re-verified; absence of one is never a proof that the identity holds.
// Candidate RNG streams are derived from (seed, candidate index), so results
// do not depend on the thread count.
SearchResult search_counterexample(MonoidKind kind, const Identity& id, const SearchOptions& options);

// true iff the substitution separates the sides (a valid NO-certificate)
bool verify_certificate(MonoidKind kind, const Identity& id, const Substitution& sub);

// The constructive witness for an unbalanced identity: an imbalanced letter
// goes to (id; 1), every other letter to (id; 0). Nullopt when balanced.
std::optional<Substitution> imbalance_witness(MonoidKind kind, const Identity& id);

}  // namespace wiremono

#endif  // WIREMONO_IDENTITY_HPP_
