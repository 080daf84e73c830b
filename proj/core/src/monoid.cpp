#include "wiremono/monoid.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wiremono {

namespace {

const char* family_prefix(MonoidFamily f) {
  switch (f) {
    case MonoidFamily::TwistedBrauer: return "bt";
    case MonoidFamily::PmTwistedBrauer: return "pbt";
    case MonoidFamily::TwistedPartition: return "pt";
    case MonoidFamily::TwistedPartialBrauer: return "pbr";
  }
  throw std::logic_error("unreachable");
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("circle count overflow");
  }
  return out;
}

MonoidKind make_kind(MonoidFamily f, int n) {
  if (n < 1) throw std::invalid_argument("monoid rank must be at least 1");
  return MonoidKind{f, n};
}

}  // namespace

MonoidKind twisted_brauer(int n) { return make_kind(MonoidFamily::TwistedBrauer, n); }
MonoidKind pm_twisted_brauer(int n) { return make_kind(MonoidFamily::PmTwistedBrauer, n); }
MonoidKind twisted_partition(int n) { return make_kind(MonoidFamily::TwistedPartition, n); }
MonoidKind twisted_partial_brauer(int n) { return make_kind(MonoidFamily::TwistedPartialBrauer, n); }

std::string MonoidKind::str() const { return std::string(family_prefix(family)) + ":" + std::to_string(n); }

MonoidKind MonoidKind::parse(std::string_view text) {
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("monoid kind must look like bt:<n>, pbt:<n>, pt:<n> or pbr:<n>");
  }
  const std::string_view prefix = text.substr(0, colon);
  MonoidFamily family;
  if (prefix == "bt") {
    family = MonoidFamily::TwistedBrauer;
  } else if (prefix == "pbt") {
    family = MonoidFamily::PmTwistedBrauer;
  } else if (prefix == "pt") {
    family = MonoidFamily::TwistedPartition;
  } else if (prefix == "pbr") {
    family = MonoidFamily::TwistedPartialBrauer;
  } else {
    throw std::invalid_argument("unknown monoid prefix '" + std::string(prefix) + "'");
  }
  int n = 0;
  const std::string_view digits = text.substr(colon + 1);
  if (digits.empty()) throw std::invalid_argument("missing rank in monoid kind");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("bad rank in monoid kind");
    }
    n = n * 10 + (ch - '0');
  }
  return make_kind(family, n);
}

std::string GeneratorSymbol::str() const {
  switch (type) {
    case Type::T: return "t" + std::to_string(index);
    case Type::H: return "h" + std::to_string(index);
    case Type::C: return "c";
    case Type::D: return "d";
  }
  throw std::logic_error("unreachable");
}

GeneratorSymbol GeneratorSymbol::parse(std::string_view text) {
  if (text == "c") return c();
  if (text == "d") return d();
  if (text.size() >= 2 && (text[0] == 't' || text[0] == 'h')) {
    int i = 0;
    for (char ch : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("bad generator '" + std::string(text) + "'");
      }
      i = i * 10 + (ch - '0');
    }
    return text[0] == 't' ? t(i) : h(i);
  }
  throw std::invalid_argument("bad generator '" + std::string(text) + "'");
}

namespace {

void check_element_invariants(const MonoidKind& kind, const Diagram& d, long long twist) {
  const int n = std::holds_alternative<Matching>(d) ? std::get<Matching>(d).n()
                                                    : std::get<SetPartition>(d).n();
  if (n != kind.n) {
    throw std::invalid_argument("diagram rank " + std::to_string(n) + " does not match " + kind.str());
  }
  if (twist < 0 && !kind.signed_twist()) {
    throw std::invalid_argument("negative circle count is only allowed in " +
                                std::string(family_prefix(MonoidFamily::PmTwistedBrauer)) + " kinds");
  }
  if (kind.matching_based() && !std::holds_alternative<Matching>(d)) {
    throw std::invalid_argument(kind.str() + " elements must carry a matching");
  }
  if (!kind.matching_based() && !std::holds_alternative<SetPartition>(d)) {
    throw std::invalid_argument(kind.str() + " elements must carry a set partition");
  }
  if (kind.family == MonoidFamily::TwistedPartialBrauer &&
      !is_partial_brauer(std::get<SetPartition>(d))) {
    throw std::invalid_argument("partial-Brauer elements may not have blocks of size > 2");
  }
}

}  // namespace

TwistedElement::TwistedElement(MonoidKind kind, Matching diagram, long long twist)
    : kind_(kind), diagram_(std::move(diagram)), twist_(twist) {
  check_element_invariants(kind_, diagram_, twist_);
}

TwistedElement::TwistedElement(MonoidKind kind, SetPartition diagram, long long twist)
    : kind_(kind), diagram_(std::move(diagram)), twist_(twist) {
  check_element_invariants(kind_, diagram_, twist_);
}

TwistedElement TwistedElement::identity(MonoidKind kind) {
  if (kind.matching_based()) return TwistedElement(kind, Matching::identity(kind.n), 0);
  return TwistedElement(kind, SetPartition::identity(kind.n), 0);
}

TwistedElement TwistedElement::generator(MonoidKind kind, GeneratorSymbol g) {
  const int n = kind.n;
  switch (g.type) {
    case GeneratorSymbol::Type::C:
      return kind.matching_based() ? TwistedElement(kind, Matching::identity(n), 1)
                                   : TwistedElement(kind, SetPartition::identity(n), 1);
    case GeneratorSymbol::Type::D:
      if (!kind.signed_twist()) {
        throw std::invalid_argument("generator d only exists in " + std::string("pbt") + " kinds");
      }
      return TwistedElement(kind, Matching::identity(n), -1);
    case GeneratorSymbol::Type::T:
    case GeneratorSymbol::Type::H: {
      const int i = g.index;
      if (i < 1 || i >= n) {
        throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for n=" +
                                    std::to_string(n));
      }
      std::vector<std::pair<int, int>> pairs;
      for (int j = 0; j < n; ++j) {
        if (j == i - 1 || j == i) continue;
        pairs.emplace_back(j, n + j);
      }
      if (g.type == GeneratorSymbol::Type::T) {
        pairs.emplace_back(i - 1, n + i);
        pairs.emplace_back(i, n + i - 1);
      } else {
        pairs.emplace_back(i - 1, i);
        pairs.emplace_back(n + i - 1, n + i);
      }
      Matching m = Matching::from_pairs(n, pairs);
      if (kind.matching_based()) return TwistedElement(kind, std::move(m), 0);
      return TwistedElement(kind, SetPartition::of(m), 0);
    }
  }
  throw std::logic_error("unreachable");
}

const Matching& TwistedElement::matching() const {
  if (!holds_matching()) throw std::invalid_argument("element does not carry a matching");
  return std::get<Matching>(diagram_);
}

const SetPartition& TwistedElement::partition() const {
  if (holds_matching()) throw std::invalid_argument("element does not carry a set partition");
  return std::get<SetPartition>(diagram_);
}

SetPartition TwistedElement::as_partition() const {
  if (holds_matching()) return SetPartition::of(std::get<Matching>(diagram_));
  return std::get<SetPartition>(diagram_);
}

int TwistedElement::through_count() const {
  if (holds_matching()) return std::get<Matching>(diagram_).through_count();
  const SetPartition& p = std::get<SetPartition>(diagram_);
  // blocks that touch both sides
  std::vector<char> left(static_cast<size_t>(p.block_count()), 0);
  std::vector<char> both(static_cast<size_t>(p.block_count()), 0);
  for (int q = 0; q < p.n(); ++q) left[static_cast<size_t>(p.block_of(q))] = 1;
  for (int q = p.n(); q < p.points(); ++q) {
    const auto b = static_cast<size_t>(p.block_of(q));
    if (left[b]) both[b] = 1;
  }
  int t = 0;
  for (char flag : both) t += flag;
  return t;
}

TwistedElement multiply(const TwistedElement& x, const TwistedElement& y) {
  if (!(x.kind() == y.kind())) {
    throw std::invalid_argument("cannot multiply " + x.kind().str() + " by " + y.kind().str());
  }
  long long twist = checked_add(x.twist(), y.twist());
  if (x.kind().matching_based()) {
    BrauerProduct p = brauer_multiply(x.matching(), y.matching());
    return TwistedElement(x.kind(), std::move(p.diagram), checked_add(twist, p.circles));
  }
  PartitionProduct p = partition_multiply(x.partition(), y.partition());
  return TwistedElement(x.kind(), std::move(p.partition), checked_add(twist, p.circles));
}

Diagram forget(const TwistedElement& x) { return x.diagram(); }

TwistedElement evaluate_generator_word(MonoidKind kind, std::span<const GeneratorSymbol> word) {
  if (word.empty()) {
    throw std::invalid_argument("generator word must be nonempty; use the identity constructor");
  }
  TwistedElement acc = TwistedElement::generator(kind, word[0]);
  for (size_t i = 1; i < word.size(); ++i) {
    acc = multiply(acc, TwistedElement::generator(kind, word[i]));
  }
  return acc;
}

std::vector<GeneratorSymbol> valid_generators(MonoidKind kind) {
  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i < kind.n; ++i) gens.push_back(GeneratorSymbol::t(i));
  for (int i = 1; i < kind.n; ++i) gens.push_back(GeneratorSymbol::h(i));
  gens.push_back(GeneratorSymbol::c());
  if (kind.signed_twist()) gens.push_back(GeneratorSymbol::d());
  return gens;
}

TwistedElement random_element(MonoidKind kind, int length, std::mt19937_64& rng) {
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  const std::vector<GeneratorSymbol> gens = valid_generators(kind);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  TwistedElement acc = TwistedElement::identity(kind);
  for (int i = 0; i < length; ++i) {
    acc = multiply(acc, TwistedElement::generator(kind, gens[pick(rng)]));
  }
  return acc;
}

TwistedElement random_element(MonoidKind kind, int length, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_element(kind, length, rng);
}

std::string format_element(const TwistedElement& x) {
  std::ostringstream os;
  os << x.kind().str() << ' ';
  const std::string d = x.holds_matching() ? format_diagram(x.matching()) : format_diagram(x.partition());
  os << d.substr(d.find(' ') + 1);  // drop the n=<rank> prefix, the kind carries it
  os << " ; s=" << x.twist();
  return os.str();
}

TwistedElement parse_element(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  size_t kind_end = pos;
  while (kind_end < text.size() && !std::isspace(static_cast<unsigned char>(text[kind_end]))) ++kind_end;
  const MonoidKind kind = MonoidKind::parse(text.substr(pos, kind_end - pos));

  const size_t semi = text.find(';', kind_end);
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("element must end with '; s=<integer>'");
  }
  const std::string diagram_text = "n=" + std::to_string(kind.n) + " " +
                                   std::string(text.substr(kind_end, semi - kind_end));
  SetPartition part = parse_diagram(diagram_text);

  std::string_view tail = text.substr(semi + 1);
  size_t t = 0;
  while (t < tail.size() && std::isspace(static_cast<unsigned char>(tail[t]))) ++t;
  if (tail.substr(t, 2) != "s=") throw std::invalid_argument("element must end with '; s=<integer>'");
  tail.remove_prefix(t + 2);
  long long twist = 0;
  try {
    size_t used = 0;
    twist = std::stoll(std::string(tail), &used);
    while (used < tail.size() && std::isspace(static_cast<unsigned char>(tail[used]))) ++used;
    if (used != tail.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad circle count in element");
  }

  if (kind.matching_based()) return TwistedElement(kind, part.to_matching(), twist);
  return TwistedElement(kind, std::move(part), twist);
}

size_t TwistedElementHash::operator()(const TwistedElement& x) const {
  size_t h = x.holds_matching() ? MatchingHash{}(x.matching()) : SetPartitionHash{}(x.partition());
  h ^= std::hash<long long>{}(x.twist()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= static_cast<size_t>(x.kind().family) * 1000003u + static_cast<size_t>(x.kind().n);
  return h;
}

}  // namespace wiremono
