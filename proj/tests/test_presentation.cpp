#include <map>
#include <unordered_set>

#include <stdexcept>

#include "doctest.h"
#include "wiremono/presentation.hpp"

using namespace wiremono;

namespace {

std::map<RelationName, int> count_by_name(const std::vector<RelationInstance>& suite) {
  std::map<RelationName, int> counts;
  for (const auto& rel : suite) ++counts[rel.name];
  return counts;
}

}  // namespace

TEST_CASE("suite contents at rank 3") {
  const auto suite = relation_suite(3, false);
  const auto counts = count_by_name(suite);
  CHECK(counts.at(RelationName::M1) == 2);
  CHECK(counts.count(RelationName::M2) == 0);
  CHECK(counts.at(RelationName::M3) == 2);
  CHECK(counts.at(RelationName::C) == 2);
  CHECK(counts.count(RelationName::TL1) == 0);
  CHECK(counts.at(RelationName::TL2) == 2);
  CHECK(counts.at(RelationName::TL3a) + counts.at(RelationName::TL3b) == 4);
  CHECK(counts.at(RelationName::Mix1a) + counts.at(RelationName::Mix1b) == 4);
  CHECK(counts.count(RelationName::Mix2) == 0);
  CHECK(counts.at(RelationName::Mix3a) + counts.at(RelationName::Mix3b) == 4);
  CHECK(suite.size() == 20);
}

TEST_CASE("suite contents at rank 2") {
  const auto suite = relation_suite(2, false);
  const auto counts = count_by_name(suite);
  CHECK(counts.at(RelationName::M1) == 1);
  CHECK(counts.at(RelationName::C) == 1);
  CHECK(counts.at(RelationName::TL3a) + counts.at(RelationName::TL3b) == 2);
  CHECK(counts.at(RelationName::Mix1a) + counts.at(RelationName::Mix1b) == 2);
  CHECK(suite.size() == 6);

  const auto with_d = relation_suite(2, true);
  CHECK(with_d.size() == 8);  // adds cd = 1 and dc = 1
  CHECK(count_by_name(with_d).at(RelationName::Inv) == 2);

  CHECK_THROWS_AS(relation_suite(1, false), std::invalid_argument);
}

TEST_CASE("commuting pairs appear at rank 4") {
  const auto counts = count_by_name(relation_suite(4, false));
  CHECK(counts.at(RelationName::M2) == 1);    // t1 t3 = t3 t1
  CHECK(counts.at(RelationName::TL1) == 1);   // h1 h3 = h3 h1
  CHECK(counts.at(RelationName::Mix2) == 2);  // h1 t3 and h3 t1
}

TEST_CASE("all relations hold across ranks and kinds") {
  for (int n = 2; n <= 6; ++n) {
    const RelationReport unsigned_report = verify_relations(twisted_brauer(n));
    CHECK(unsigned_report.all_hold());
    const RelationReport signed_report = verify_relations(pm_twisted_brauer(n));
    CHECK(signed_report.all_hold());
  }
  CHECK(verify_relations(twisted_partition(4)).all_hold());
  CHECK(verify_relations(twisted_partial_brauer(4)).all_hold());
}

TEST_CASE("a mutated relation fails with a concrete pair") {
  const MonoidKind bt3 = twisted_brauer(3);
  // h1 h2 h1 = h2 is false: the sides evaluate to different elements
  const std::vector<GeneratorSymbol> lhs{GeneratorSymbol::h(1), GeneratorSymbol::h(2),
                                         GeneratorSymbol::h(1)};
  const std::vector<GeneratorSymbol> rhs{GeneratorSymbol::h(2)};
  const TwistedElement left = evaluate_relation_side(bt3, lhs);
  const TwistedElement right = evaluate_relation_side(bt3, rhs);
  CHECK_FALSE(left == right);
  CHECK(left == evaluate_relation_side(bt3, {GeneratorSymbol::h(1)}));
}

TEST_CASE("transposition words generate exactly the unit diagrams") {
  // closing the transpositions under multiplication yields the n! diagrams
  // of the symmetric group, all with no circles
  for (int n = 3; n <= 4; ++n) {
    const MonoidKind kind = twisted_brauer(n);
    std::vector<TwistedElement> gens;
    for (int i = 1; i < n; ++i) gens.push_back(TwistedElement::generator(kind, GeneratorSymbol::t(i)));

    std::unordered_set<TwistedElement, TwistedElementHash> closure;
    std::vector<TwistedElement> todo{TwistedElement::identity(kind)};
    closure.insert(todo.back());
    while (!todo.empty()) {
      const TwistedElement cur = todo.back();
      todo.pop_back();
      for (const TwistedElement& g : gens) {
        TwistedElement next = multiply(cur, g);
        if (closure.insert(next).second) todo.push_back(next);
      }
    }
    long long expected = 1;
    for (int k = 2; k <= n; ++k) expected *= k;
    CHECK(closure.size() == static_cast<size_t>(expected));
    for (const TwistedElement& x : closure) {
      CHECK(x.twist() == 0);
      CHECK(x.matching().through_count() == n);
    }
  }
}

TEST_CASE("hooks generate the planar diagrams") {
  // the diagrams reachable from hooks alone are the crossing-free ones,
  // counted by the Catalan numbers: 5 at rank 3, 14 at rank 4
  const std::vector<size_t> catalan{1, 1, 2, 5, 14};
  for (int n = 2; n <= 4; ++n) {
    std::vector<Matching> gens;
    gens.push_back(Matching::identity(n));
    for (int i = 1; i < n; ++i) {
      gens.push_back(TwistedElement::generator(twisted_brauer(n), GeneratorSymbol::h(i)).matching());
    }
    std::unordered_set<Matching, MatchingHash> closure;
    std::vector<Matching> todo = gens;
    for (const Matching& g : gens) closure.insert(g);
    while (!todo.empty()) {
      const Matching cur = todo.back();
      todo.pop_back();
      for (const Matching& g : gens) {
        Matching next = brauer_multiply(cur, g).diagram;
        if (closure.insert(next).second) todo.push_back(next);
      }
    }
    CHECK(closure.size() == catalan[static_cast<size_t>(n)]);
  }
}

TEST_CASE("suite prints in generator-word format") {
  const auto suite = relation_suite(2, true);
  bool saw_m1 = false, saw_inv = false;
  for (const auto& rel : suite) {
    if (rel.str() == "M1(1): t1 t1 = 1") saw_m1 = true;
    if (rel.str() == "Inv: c d = 1") saw_inv = true;
  }
  CHECK(saw_m1);
  CHECK(saw_inv);
}
