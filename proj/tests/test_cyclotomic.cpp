#include <doctest.h>

#include <random>

#include "ufo7/cyclotomic.hpp"

using namespace ufo7;

namespace {

std::mt19937 rng(20240811);

Cyc random_cyc(int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  Rat c[4];
  for (auto& x : c) {
    x = Rat(num(rng), den(rng));
    x.canonicalize();
  }
  return Cyc(c[0], c[1], c[2], c[3]);
}

} // namespace

TEST_CASE("addition basics") {
  CHECK(Cyc(1) + Cyc(0) == Cyc(1));
  CHECK((Cyc::zeta(1) + (-Cyc::zeta(1))).is_zero());
  Cyc a = Cyc(1) + Cyc::zeta(2);
  Cyc b = Cyc::zeta(2) - Cyc(1);
  CHECK(a + b == Cyc(2) * Cyc::zeta(2));
}

TEST_CASE("multiplication reduces by the minimal polynomial") {
  CHECK(Cyc::zeta(3) * Cyc::zeta(3) == Cyc(-1));
  CHECK(Cyc::zeta(1) * Cyc::zeta(1).inv() == Cyc(1));
  // z^4 = z^2 - 1
  CHECK(Cyc::zeta(2) * Cyc::zeta(2) == Cyc::zeta(2) - Cyc(1));
  CHECK(Cyc::zeta(2) * Cyc::zeta(2) == Cyc(Rat(-1), Rat(0), Rat(1), Rat(0)));
}

TEST_CASE("inverses") {
  CHECK(Cyc(2).inv() == Cyc(Rat(1, 2)));
  // 1/z = z^11 = -z^3 + z
  CHECK(Cyc::zeta(1).inv() == Cyc(Rat(0), Rat(1), Rat(0), Rat(-1)));
  CHECK_THROWS_AS(Cyc(0).inv(), std::domain_error);
}

TEST_CASE("powers of zeta") {
  CHECK(Cyc::zeta(1).pow(12) == Cyc(1));
  for (int k = 1; k <= 11; ++k) CHECK(Cyc::zeta(k) != Cyc(1));
  CHECK(Cyc::zeta(6) == Cyc(-1));
  CHECK(Cyc::zeta(8) == -Cyc::zeta(2));
}

TEST_CASE("root of unity order") {
  CHECK(Cyc::zeta(8).root_of_unity_order() == 3);
  CHECK(Cyc(-1).root_of_unity_order() == 2);
  CHECK(!Cyc(2).root_of_unity_order().has_value());
  for (int k = 0; k < 12; ++k) {
    int expected = 12 / std::gcd(k, 12);
    CHECK(Cyc::zeta(k).root_of_unity_order() == expected);
  }
}

TEST_CASE("field axioms on random samples") {
  for (int i = 0; i < 1000; ++i) {
    Cyc a = random_cyc(), b = random_cyc(), c = random_cyc();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inv() == Cyc(1));
  }
}

TEST_CASE("parse and format") {
  CHECK(Cyc::parse("z^8") == Cyc(Rat(0), Rat(0), Rat(-1), Rat(0)));
  CHECK(Cyc::parse("z^8").str() == "-z^2");
  CHECK(Cyc::parse("3/2*z - 1") == Cyc(Rat(-1), Rat(3, 2), Rat(0), Rat(0)));
  CHECK(Cyc::parse("3/2*z - 1").str() == "-1 + 3/2*z");
  CHECK(Cyc(0).str() == "0");
  CHECK(Cyc::parse("0").is_zero());
  CHECK_THROWS_AS(Cyc::parse("z^^2"), CycParseError);
  CHECK_THROWS_AS(Cyc::parse(""), CycParseError);
  CHECK_THROWS_AS(Cyc::parse("1 +"), CycParseError);
  try {
    Cyc::parse("z^^2");
  } catch (const CycParseError& e) {
    CHECK(e.pos == 2);
  }
}

TEST_CASE("parse(format(a)) round-trips, format(parse(s)) canonical") {
  for (int i = 0; i < 1000; ++i) {
    Cyc a = random_cyc(9);
    Cyc back = Cyc::parse(a.str());
    CHECK(back == a);
    CHECK(back.str() == a.str());
  }
  // formats also accept verbose input forms
  CHECK(Cyc::parse("1*z^1") == Cyc::zeta(1));
  CHECK(Cyc::parse("  2 z^3 ") == Cyc(2) * Cyc::zeta(3));
  CHECK(Cyc::parse("-z") == -Cyc::zeta(1));
}
