#ifndef WIREMONO_MONOID_HPP_
#define WIREMONO_MONOID_HPP_

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wiremono/diagram.hpp"

namespace wiremono {

enum class MonoidFamily {
  TwistedBrauer,        // (matching; s >= 0)         prefix bt
  PmTwistedBrauer,      // (matching; s in Z)          prefix pbt
  TwistedPartition,     // (partition; s >= 0)         prefix pt
  TwistedPartialBrauer  // (blocks <= 2; s >= 0)       prefix pbr
};

struct MonoidKind {
  MonoidFamily family = MonoidFamily::TwistedBrauer;
  int n = 1;

  bool signed_twist() const { return family == MonoidFamily::PmTwistedBrauer; }
  bool matching_based() const {
    return family == MonoidFamily::TwistedBrauer || family == MonoidFamily::PmTwistedBrauer;
  }

  std::string str() const;
  static MonoidKind parse(std::string_view text);

  bool operator==(const MonoidKind&) const = default;
};

MonoidKind twisted_brauer(int n);
MonoidKind pm_twisted_brauer(int n);
MonoidKind twisted_partition(int n);
MonoidKind twisted_partial_brauer(int n);

/// t_i, h_i, the circle c, and (signed kinds only) its inverse d.
struct GeneratorSymbol {
  enum class Type { T, H, C, D };
  Type type = Type::C;
  int index = 0;  // 1-based, only for T/H

  static GeneratorSymbol t(int i) { return {Type::T, i}; }
  static GeneratorSymbol h(int i) { return {Type::H, i}; }
  static GeneratorSymbol c() { return {Type::C, 0}; }
  static GeneratorSymbol d() { return {Type::D, 0}; }

  std::string str() const;
  static GeneratorSymbol parse(std::string_view text);

  bool operator==(const GeneratorSymbol&) const = default;
};

using Diagram = std::variant<Matching, SetPartition>;

/// A diagram together with its circle count, tagged by the monoid it lives
/// in. Values are immutable; the kind is checked on every product.
class TwistedElement {
 public:
  TwistedElement(MonoidKind kind, Matching diagram, long long twist);
  TwistedElement(MonoidKind kind, SetPartition diagram, long long twist);

  static TwistedElement identity(MonoidKind kind);
  static TwistedElement generator(MonoidKind kind, GeneratorSymbol g);

  const MonoidKind& kind() const { return kind_; }
  long long twist() const { return twist_; }
  const Diagram& diagram() const { return diagram_; }

  bool holds_matching() const { return std::holds_alternative<Matching>(diagram_); }
  const Matching& matching() const;
  const SetPartition& partition() const;
  SetPartition as_partition() const;  // converts matchings

  int through_count() const;

  bool operator==(const TwistedElement&) const = default;

  std::string str() const;

 private:
  MonoidKind kind_;
  Diagram diagram_;
  long long twist_ = 0;
};

// (pi1; s1)(pi2; s2) = (pi1 pi2; s1 + s2 + <pi1, pi2>), kinds must agree
TwistedElement multiply(const TwistedElement& x, const TwistedElement& y);

// drop the circle count
Diagram forget(const TwistedElement& x);

// left-to-right product of generator images; the word must be nonempty
TwistedElement evaluate_generator_word(MonoidKind kind, std::span<const GeneratorSymbol> word);

std::vector<GeneratorSymbol> valid_generators(MonoidKind kind);

// product of `length` uniformly chosen generators, deterministic per seed
TwistedElement random_element(MonoidKind kind, int length, std::mt19937_64& rng);
TwistedElement random_element(MonoidKind kind, int length, uint64_t seed);

// text form: `bt:3 [1 2][3 3'][1' 2'] ; s=0`
std::string format_element(const TwistedElement& x);
TwistedElement parse_element(std::string_view text);

struct TwistedElementHash {
  size_t operator()(const TwistedElement& x) const;
};

}  // namespace wiremono

#endif  // WIREMONO_MONOID_HPP_
