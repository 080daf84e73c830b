#include "wiremono/identity.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>
#include <sstream>
#include <thread>

namespace wiremono {

std::vector<int> Word::alphabet() const {
  std::set<int> ids(letters.begin(), letters.end());
  return std::vector<int>(ids.begin(), ids.end());
}

std::vector<int> Identity::alphabet() const {
  std::set<int> ids(lhs.letters.begin(), lhs.letters.end());
  ids.insert(rhs.letters.begin(), rhs.letters.end());
  return std::vector<int>(ids.begin(), ids.end());
}

std::string Identity::letter_name(int id) const {
  if (id >= 1 && static_cast<size_t>(id) <= names.size() && !names[static_cast<size_t>(id - 1)].empty()) {
    return names[static_cast<size_t>(id - 1)];
  }
  return "x" + std::to_string(id);
}

std::string Identity::str() const {
  return format_word(lhs, names) + " = " + format_word(rhs, names);
}

namespace {

int intern_letter(const std::string& name, std::vector<std::string>& names) {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i) + 1;
  }
  names.push_back(name);
  return static_cast<int>(names.size());
}

}  // namespace

Word parse_word(std::string_view text, std::vector<std::string>& names) {
  Word w;
  size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch < 'a' || ch > 'z') {
      throw std::invalid_argument(std::string("unexpected character '") + ch + "' in word");
    }
    std::string name(1, ch);
    ++pos;
    if (ch == 'x' && pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        name.push_back(text[pos]);
        ++pos;
      }
    }
    w.letters.push_back(intern_letter(name, names));
  }
  if (w.empty()) throw std::invalid_argument("words must be nonempty");
  return w;
}

Identity parse_identity(std::string_view text) {
  const size_t eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw std::invalid_argument("an identity needs exactly one '='");
  }
  Identity id;
  id.lhs = parse_word(text.substr(0, eq), id.names);
  id.rhs = parse_word(text.substr(eq + 1), id.names);
  return id;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (int letter : w.letters) {
    if (letter >= 1 && static_cast<size_t>(letter) <= names.size() &&
        !names[static_cast<size_t>(letter - 1)].empty()) {
      os << names[static_cast<size_t>(letter - 1)];
    } else {
      os << 'x' << letter;
    }
  }
  return os.str();
}

bool is_balanced(const Identity& id) {
  std::map<int, long long> balance;
  for (int letter : id.lhs.letters) ++balance[letter];
  for (int letter : id.rhs.letters) --balance[letter];
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

TwistedElement evaluate(const Word& w, const Substitution& sub) {
  if (w.empty()) throw std::invalid_argument("cannot evaluate an empty word");
  auto lookup = [&sub](int letter) -> const TwistedElement& {
    auto it = sub.find(letter);
    if (it == sub.end()) {
      throw std::invalid_argument("substitution has no binding for letter " + std::to_string(letter));
    }
    return it->second;
  };
  TwistedElement acc = lookup(w.letters[0]);
  for (size_t i = 1; i < w.size(); ++i) acc = multiply(acc, lookup(w.letters[i]));
  return acc;
}

Perm evaluate(const Word& w, const PermSubstitution& sub) {
  if (w.empty()) throw std::invalid_argument("cannot evaluate an empty word");
  auto lookup = [&sub](int letter) -> const Perm& {
    auto it = sub.find(letter);
    if (it == sub.end()) {
      throw std::invalid_argument("substitution has no binding for letter " + std::to_string(letter));
    }
    return it->second;
  };
  Perm acc = lookup(w.letters[0]);
  for (size_t i = 1; i < w.size(); ++i) acc = acc.then(lookup(w.letters[i]));
  return acc;
}

GroupCheck check_symmetric_group(int k, const Identity& id, long long budget) {
  if (k < 1 || k > 5) throw std::invalid_argument("exhaustive group check supports degrees 1..5");
  const std::vector<int> letters = id.alphabet();
  const std::vector<Perm> perms = Perm::all(k);

  long long total = 1;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (total > budget / static_cast<long long>(perms.size()) + 1) {
      throw BudgetExceeded("group check needs more than the allowed evaluations");
    }
    total *= static_cast<long long>(perms.size());
  }
  if (total > budget) {
    throw BudgetExceeded("group check needs " + std::to_string(total) + " evaluations, budget is " +
                         std::to_string(budget));
  }

  std::vector<size_t> odometer(letters.size(), 0);
  PermSubstitution sub;
  for (;;) {
    for (size_t i = 0; i < letters.size(); ++i) sub[letters[i]] = perms[odometer[i]];
    if (!(evaluate(id.lhs, sub) == evaluate(id.rhs, sub))) {
      return GroupCheck{false, sub};
    }
    size_t pos = 0;
    while (pos < odometer.size() && ++odometer[pos] == perms.size()) {
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == odometer.size()) break;
  }
  return GroupCheck{true, {}};
}

SnZCheck check_sn_times_z(int k, const Identity& id, long long budget) {
  if (!is_balanced(id)) return SnZCheck{SnZCheck::Status::Unbalanced, {}};
  GroupCheck group = check_symmetric_group(k, id, budget);
  if (group.holds) return SnZCheck{SnZCheck::Status::Holds, {}};
  return SnZCheck{SnZCheck::Status::GroupCounterexample, std::move(group.counterexample)};
}

namespace {

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Word unit_form_word(const Identity& id, int k, size_t cap) {
  if (k < 1 || k > 5) throw std::invalid_argument("unit form supports degrees 1..5");
  const long long reps = factorial(k) - 1;
  const size_t length =
      static_cast<size_t>(reps) * id.lhs.size() + id.rhs.size();
  if (cap == 0) cap = 10'000'000;
  if (length > cap) {
    throw std::length_error("unit form word would have " + std::to_string(length) +
                            " letters, cap is " + std::to_string(cap));
  }
  Word out;
  out.letters.reserve(length);
  for (long long r = 0; r < reps; ++r) {
    out.letters.insert(out.letters.end(), id.lhs.letters.begin(), id.lhs.letters.end());
  }
  out.letters.insert(out.letters.end(), id.rhs.letters.begin(), id.rhs.letters.end());
  return out;
}

Identity centralize(const Word& v, const std::vector<std::string>& names) {
  if (v.empty()) throw std::invalid_argument("cannot centralize an empty word");
  const std::vector<int> alphabet = v.alphabet();
  const int fresh = alphabet.empty() ? 1 : alphabet.back() + 1;
  Identity id;
  id.names = names;
  id.lhs = v;
  id.lhs.letters.push_back(fresh);
  id.rhs.letters.push_back(fresh);
  id.rhs.letters.insert(id.rhs.letters.end(), v.letters.begin(), v.letters.end());
  return id;
}

std::optional<Substitution> imbalance_witness(MonoidKind kind, const Identity& id) {
  std::map<int, long long> balance;
  for (int letter : id.lhs.letters) ++balance[letter];
  for (int letter : id.rhs.letters) --balance[letter];
  int imbalanced = 0;
  for (const auto& [letter, count] : balance) {
    if (count != 0) {
      imbalanced = letter;
      break;
    }
  }
  if (imbalanced == 0) return std::nullopt;
  Substitution sub;
  const TwistedElement one = TwistedElement::identity(kind);
  const TwistedElement circle = TwistedElement::generator(kind, GeneratorSymbol::c());
  for (int letter : id.alphabet()) {
    sub.emplace(letter, letter == imbalanced ? circle : one);
  }
  return sub;
}

bool verify_certificate(MonoidKind kind, const Identity& id, const Substitution& sub) {
  for (const auto& [letter, value] : sub) {
    if (!(value.kind() == kind)) {
      throw std::invalid_argument("certificate value for letter " + std::to_string(letter) +
                                  " lives in " + value.kind().str() + ", expected " + kind.str());
    }
  }
  for (int letter : id.alphabet()) {
    if (sub.find(letter) == sub.end()) {
      throw std::invalid_argument("certificate misses letter " + id.letter_name(letter));
    }
  }
  return !(evaluate(id.lhs, sub) == evaluate(id.rhs, sub));
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Generator words of length 0..max_len in a fixed order, addressed by a
// flat index; used by the exhaustive strategy. Band sizes saturate instead
// of overflowing, which only shortens how far the enumeration can reach.
class GeneratorWordTable {
 public:
  GeneratorWordTable(MonoidKind kind, int max_len) : kind_(kind), gens_(valid_generators(kind)) {
    constexpr unsigned long long kSaturate = 1ull << 62;
    unsigned long long power = 1;
    bands_.push_back(1);  // the empty word
    count_ = 1;
    for (int len = 1; len <= max_len; ++len) {
      if (power > kSaturate / gens_.size()) {
        power = kSaturate;
      } else {
        power *= gens_.size();
      }
      bands_.push_back(power);
      count_ = count_ > kSaturate - power ? kSaturate : count_ + power;
      if (count_ == kSaturate) break;
    }
  }

  unsigned long long count() const { return count_; }

  TwistedElement element(unsigned long long index) const {
    size_t len = 0;
    while (len + 1 < bands_.size() && index >= bands_[len]) {
      index -= bands_[len];
      ++len;
    }
    TwistedElement acc = TwistedElement::identity(kind_);
    for (size_t i = 0; i < len; ++i) {
      acc = multiply(acc, TwistedElement::generator(kind_, gens_[index % gens_.size()]));
      index /= gens_.size();
    }
    return acc;
  }

 private:
  MonoidKind kind_;
  std::vector<GeneratorSymbol> gens_;
  std::vector<unsigned long long> bands_;
  unsigned long long count_ = 0;
};

}  // namespace

SearchResult search_counterexample(MonoidKind kind, const Identity& id, const SearchOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("search budget must be positive");
  const std::vector<int> letters = id.alphabet();

  // An unbalanced identity always fails on circle powers; try that first.
  if (auto witness = imbalance_witness(kind, id)) {
    if (verify_certificate(kind, id, *witness)) {
      return SearchResult{SearchResult::Outcome::Counterexample, std::move(witness), 1};
    }
  }

  std::optional<GeneratorWordTable> table;
  unsigned long long candidate_count = static_cast<unsigned long long>(options.budget);
  if (options.strategy == SearchOptions::Strategy::ExhaustiveWords) {
    table.emplace(kind, options.exhaustive_max_len);
    unsigned long long total = 1;
    bool overflow = false;
    for (size_t i = 0; i < letters.size(); ++i) {
      if (total > candidate_count / table->count() + 1) overflow = true;
      total *= table->count();
    }
    if (!overflow) candidate_count = std::min(candidate_count, total);
  }

  auto try_candidate = [&](unsigned long long index) -> std::optional<Substitution> {
    Substitution sub;
    if (options.strategy == SearchOptions::Strategy::Random) {
      std::mt19937_64 rng(splitmix64(options.seed ^ (index * 0x2545f4914f6cdd1dull + 0x1234567u)));
      std::uniform_int_distribution<int> length(0, options.max_word_len);
      for (int letter : letters) {
        TwistedElement value = random_element(kind, length(rng), rng);
        if (kind.signed_twist() && options.max_twist_power > 0) {
          std::uniform_int_distribution<long long> twist(-options.max_twist_power, options.max_twist_power);
          value = multiply(value, TwistedElement(kind, Matching::identity(kind.n), twist(rng)));
        }
        sub.emplace(letter, std::move(value));
      }
    } else {
      unsigned long long rest = index;
      for (int letter : letters) {
        sub.emplace(letter, table->element(rest % table->count()));
        rest /= table->count();
      }
    }
    if (verify_certificate(kind, id, sub)) return sub;
    return std::nullopt;
  };

  const int threads = std::max(1, options.threads);
  std::atomic<unsigned long long> next{0};
  std::atomic<unsigned long long> best{~0ull};
  std::atomic<long long> tried{0};

  // Chunks are handed out in index order; a worker stops once its chunk
  // start passes the best hit so far, so the minimal hit index always gets
  // examined and the merged result does not depend on the thread count.
  auto worker = [&] {
    constexpr unsigned long long kChunk = 64;
    for (;;) {
      const unsigned long long start = next.fetch_add(kChunk);
      if (start >= candidate_count || start >= best.load()) return;
      const unsigned long long stop = std::min(start + kChunk, candidate_count);
      for (unsigned long long i = start; i < stop && i < best.load(); ++i) {
        tried.fetch_add(1);
        if (try_candidate(i)) {
          unsigned long long prev = best.load();
          while (i < prev && !best.compare_exchange_weak(prev, i)) {
          }
          return;
        }
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const unsigned long long winner = best.load();
  if (winner != ~0ull) {
    Substitution sub = *try_candidate(winner);  // candidates are index-deterministic
    return SearchResult{SearchResult::Outcome::Counterexample, std::move(sub), tried.load()};
  }
  return SearchResult{SearchResult::Outcome::Exhausted, std::nullopt, tried.load()};
}

}  // namespace wiremono
