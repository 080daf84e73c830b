#include <array>

#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "wiremono/monoid.hpp"

using namespace wiremono;
using wiremono::testing::random_matching;

TEST_CASE("kind parsing") {
  CHECK(MonoidKind::parse("bt:3") == twisted_brauer(3));
  CHECK(MonoidKind::parse("pbt:5") == pm_twisted_brauer(5));
  CHECK(MonoidKind::parse("pt:2") == twisted_partition(2));
  CHECK(MonoidKind::parse("pbr:4") == twisted_partial_brauer(4));
  CHECK(twisted_brauer(3).str() == "bt:3");
  CHECK_THROWS_AS(MonoidKind::parse("zz:3"), std::invalid_argument);
  CHECK_THROWS_AS(MonoidKind::parse("bt:0"), std::invalid_argument);
  CHECK_THROWS_AS(MonoidKind::parse("bt"), std::invalid_argument);
}

TEST_CASE("generator diagrams") {
  const MonoidKind bt3 = twisted_brauer(3);
  CHECK(format_element(TwistedElement::generator(bt3, GeneratorSymbol::t(1))) ==
        "bt:3 [1 2'][2 1'][3 3'] ; s=0");
  CHECK(format_element(TwistedElement::generator(bt3, GeneratorSymbol::h(2))) ==
        "bt:3 [1 1'][2 3][2' 3'] ; s=0");
  CHECK(TwistedElement::generator(bt3, GeneratorSymbol::c()) ==
        TwistedElement(bt3, Matching::identity(3), 1));
  CHECK(TwistedElement::generator(twisted_brauer(7), GeneratorSymbol::c()).twist() == 1);

  CHECK_THROWS_AS(TwistedElement::generator(bt3, GeneratorSymbol::d()), std::invalid_argument);
  CHECK_THROWS_AS(TwistedElement::generator(bt3, GeneratorSymbol::t(3)), std::invalid_argument);
  CHECK_THROWS_AS(TwistedElement::generator(bt3, GeneratorSymbol::h(0)), std::invalid_argument);
  CHECK(TwistedElement::generator(pm_twisted_brauer(3), GeneratorSymbol::d()).twist() == -1);
}

TEST_CASE("multiplication with circle bookkeeping") {
  const MonoidKind bt3 = twisted_brauer(3);
  const TwistedElement h1 = TwistedElement::generator(bt3, GeneratorSymbol::h(1));
  CHECK(multiply(h1, h1) == TwistedElement(bt3, h1.matching(), 1));  // h^2 = c h

  const MonoidKind pbt3 = pm_twisted_brauer(3);
  const TwistedElement up(pbt3, Matching::identity(3), 1);
  const TwistedElement down(pbt3, Matching::identity(3), -1);
  CHECK(multiply(up, down) == TwistedElement::identity(pbt3));

  // the rank-5 worked example: one new circle, twists add
  const MonoidKind pt5 = twisted_partition(5);
  const TwistedElement a(pt5, parse_diagram("n=5 [1 2 3 4][5 1' 3'][2'][4'][5']"), 4);
  const TwistedElement b(pt5, parse_diagram("n=5 [1 1' 2'][2 3 3'][4 4'][5][5']"), 2);
  CHECK(multiply(a, b).twist() == 4 + 2 + 1);

  CHECK_THROWS_AS(multiply(h1, up), std::invalid_argument);
  CHECK_THROWS_AS(TwistedElement(bt3, Matching::identity(3), -1), std::invalid_argument);
  const TwistedElement huge(pbt3, Matching::identity(3), std::numeric_limits<long long>::max());
  CHECK_THROWS_AS(multiply(huge, up), std::overflow_error);
}

TEST_CASE("generator words") {
  const MonoidKind bt3 = twisted_brauer(3);
  const std::array tt{GeneratorSymbol::t(1), GeneratorSymbol::t(1)};
  CHECK(evaluate_generator_word(bt3, tt) == TwistedElement::identity(bt3));

  const std::array hhh{GeneratorSymbol::h(1), GeneratorSymbol::h(2), GeneratorSymbol::h(1)};
  CHECK(evaluate_generator_word(bt3, hhh) ==
        TwistedElement::generator(bt3, GeneratorSymbol::h(1)));

  const MonoidKind pbt3 = pm_twisted_brauer(3);
  const std::array cd{GeneratorSymbol::c(), GeneratorSymbol::d()};
  CHECK(evaluate_generator_word(pbt3, cd) == TwistedElement::identity(pbt3));

  CHECK_THROWS_AS(evaluate_generator_word(bt3, std::span<const GeneratorSymbol>{}),
                  std::invalid_argument);
}

TEST_CASE("forget is a morphism onto diagrams") {
  const MonoidKind bt3 = twisted_brauer(3);
  const TwistedElement h1 = TwistedElement::generator(bt3, GeneratorSymbol::h(1));
  CHECK(std::get<Matching>(forget(TwistedElement(bt3, h1.matching(), 7))) == h1.matching());
  CHECK(std::get<Matching>(forget(TwistedElement(bt3, Matching::identity(3), 1))) ==
        Matching::identity(3));

  std::mt19937_64 rng(8);
  for (int round = 0; round < 100; ++round) {
    const TwistedElement x = random_element(bt3, static_cast<int>(rng() % 12), rng);
    const TwistedElement y = random_element(bt3, static_cast<int>(rng() % 12), rng);
    CHECK(multiply(x, y).matching() == brauer_multiply(x.matching(), y.matching()).diagram);
  }
}

TEST_CASE("random elements are reproducible") {
  const MonoidKind pbt3 = pm_twisted_brauer(3);
  CHECK(random_element(pbt3, 0, 1) == TwistedElement::identity(pbt3));
  CHECK(random_element(pbt3, 50, 12345) == random_element(pbt3, 50, 12345));
  CHECK(random_element(twisted_partition(4), 25, 7) == random_element(twisted_partition(4), 25, 7));

  // circle counts can go negative in the signed monoid; freeze one witness seed
  bool negative_seen = false;
  for (uint64_t seed = 0; seed < 64 && !negative_seen; ++seed) {
    negative_seen = random_element(pbt3, 50, seed).twist() < 0;
  }
  CHECK(negative_seen);
}

TEST_CASE("unsigned kinds never sample negative twists") {
  const MonoidKind bt2 = twisted_brauer(2);
  std::mt19937_64 rng(6);
  for (int round = 0; round < 50; ++round) {
    CHECK(random_element(bt2, 30, rng).twist() >= 0);
  }
}

TEST_CASE("identity twist powers form the free one-generator submonoid") {
  const MonoidKind bt4 = twisted_brauer(4);
  for (long long r = 0; r < 5; ++r) {
    for (long long s = 0; s < 5; ++s) {
      const TwistedElement a(bt4, Matching::identity(4), r);
      const TwistedElement b(bt4, Matching::identity(4), s);
      CHECK(multiply(a, b) == TwistedElement(bt4, Matching::identity(4), r + s));
    }
  }
}

TEST_CASE("d commutes with every generator image") {
  const MonoidKind pbt4 = pm_twisted_brauer(4);
  const TwistedElement d = TwistedElement::generator(pbt4, GeneratorSymbol::d());
  for (const GeneratorSymbol& g : valid_generators(pbt4)) {
    const TwistedElement img = TwistedElement::generator(pbt4, g);
    CHECK(multiply(d, img) == multiply(img, d));
  }
}

TEST_CASE("partition kind restricted to matchings tracks the brauer kind") {
  const MonoidKind bt = twisted_brauer(4);
  const MonoidKind pt = twisted_partition(4);
  std::mt19937_64 rng(1001);
  for (int round = 0; round < 100; ++round) {
    const Matching a = random_matching(4, rng);
    const Matching b = random_matching(4, rng);
    const TwistedElement bx(bt, a, 1);
    const TwistedElement by(bt, b, 2);
    const TwistedElement px(pt, SetPartition::of(a), 1);
    const TwistedElement py(pt, SetPartition::of(b), 2);
    const TwistedElement bp = multiply(bx, by);
    const TwistedElement pp = multiply(px, py);
    REQUIRE(pp.partition().to_matching() == bp.matching());
    REQUIRE(pp.twist() == bp.twist());
  }
}

TEST_CASE("associativity across all four kinds") {
  std::mt19937_64 rng(2024);
  const std::array kinds{twisted_brauer(4), pm_twisted_brauer(4), twisted_partition(4),
                         twisted_partial_brauer(4)};
  for (const MonoidKind& kind : kinds) {
    for (int round = 0; round < 60; ++round) {
      const TwistedElement x = random_element(kind, static_cast<int>(rng() % 14), rng);
      const TwistedElement y = random_element(kind, static_cast<int>(rng() % 14), rng);
      const TwistedElement z = random_element(kind, static_cast<int>(rng() % 14), rng);
      REQUIRE(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
  }

  // the same over genuinely non-matching partitions
  const MonoidKind pt5 = twisted_partition(5);
  for (int round = 0; round < 100; ++round) {
    const TwistedElement x(pt5, wiremono::testing::random_set_partition(5, rng),
                           static_cast<long long>(rng() % 4));
    const TwistedElement y(pt5, wiremono::testing::random_set_partition(5, rng),
                           static_cast<long long>(rng() % 4));
    const TwistedElement z(pt5, wiremono::testing::random_set_partition(5, rng),
                           static_cast<long long>(rng() % 4));
    REQUIRE(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
  }
}

TEST_CASE("partial brauer elements are closed under products") {
  std::mt19937_64 rng(808);
  const MonoidKind pbr4 = twisted_partial_brauer(4);
  for (int round = 0; round < 200; ++round) {
    const TwistedElement x(pbr4, wiremono::testing::random_partial_brauer(4, rng), 0);
    const TwistedElement y(pbr4, wiremono::testing::random_partial_brauer(4, rng), 1);
    const TwistedElement xy = multiply(x, y);  // the constructor revalidates block sizes
    REQUIRE(is_partial_brauer(xy.partition()));
    REQUIRE(xy.twist() >= 1);
  }
}

TEST_CASE("element text round trip") {
  CHECK(format_element(parse_element("bt:3 [1 2][3 3'][1' 2'] ; s=0")) ==
        "bt:3 [1 2][3 3'][1' 2'] ; s=0");
  CHECK(parse_element("pbt:2 [1 1'][2 2'] ; s=-3").twist() == -3);
  CHECK(parse_element("pt:5 [1 2 3 4][5 1' 3'][2'][4'][5'] ; s=2").partition().block_count() == 5);

  std::mt19937_64 rng(31337);
  for (int round = 0; round < 100; ++round) {
    const MonoidKind kind = pm_twisted_brauer(1 + static_cast<int>(rng() % 5));
    const TwistedElement x = random_element(kind, static_cast<int>(rng() % 20), rng);
    CHECK(parse_element(format_element(x)) == x);
  }

  CHECK_THROWS_AS(parse_element("bt:2 [1 1'][2 2'] ; s=-1"), std::invalid_argument);  // sign rule
  CHECK_THROWS_AS(parse_element("bt:2 [1 2 1' 2'] ; s=0"), std::invalid_argument);    // not a matching
  CHECK_THROWS_AS(parse_element("pbr:2 [1 2 1'][2'] ; s=0"), std::invalid_argument);  // block too big
  CHECK_THROWS_AS(parse_element("bt:2 [1 1'][2 2']"), std::invalid_argument);         // missing twist
}
