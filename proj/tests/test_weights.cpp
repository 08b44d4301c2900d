#include <doctest.h>

#include <random>

#include "ufo7/weights.hpp"

using namespace ufo7;

TEST_CASE("the five conditions") {
  auto c = conditions(Cyc(1), Cyc(1));
  CHECK(c == std::array<bool, 5>{true, false, false, false, true});
  c = conditions(Cyc::zeta(8), Cyc::zeta(5));
  CHECK(c == std::array<bool, 5>{true, false, false, true, false});
  c = conditions(Cyc(2), Cyc(3));
  CHECK(c == std::array<bool, 5>{false, false, false, false, false});
}

TEST_CASE("classify") {
  CHECK(classify(Cyc(1), Cyc(1)).index == 47);
  CHECK(classify(Cyc(1), Cyc::zeta(1)).index == 11);
  CHECK(classify(Cyc(2), Cyc(3)).index == 1);
  CHECK(classify(Cyc::zeta(8), Cyc(2)).index == 3);
  CHECK(classify(Cyc(1), Cyc(2)).index == 2);
  CHECK_THROWS_AS(classify(Cyc(0), Cyc(1)), std::domain_error);
}

TEST_CASE("shapovalov determinant") {
  CHECK(shapovalov(Cyc(2), Cyc(1)).is_zero());     // factor lambda2^-1 - 1
  CHECK(shapovalov(Cyc::zeta(8), Cyc(2)).is_zero());
  CHECK(!shapovalov(Cyc(2), Cyc(3)).is_zero());
}

TEST_CASE("representatives classify into their family") {
  for (int f = 1; f <= 47; ++f) {
    auto [l1, l2] = representative_lambdas({f});
    CHECK(classify(l1, l2).index == f);
    WeightParams p = representative({f});
    CHECK(p.lambda1() == l1);
    CHECK(p.lambda2() == l2);
  }
  auto [l1, l2] = representative_lambdas({4});
  CHECK(l1 == Cyc(2));
  CHECK(l2 == Cyc(Rat(-1, 4)));
  auto [m1, m2] = representative_lambdas({6});
  CHECK(m1 == Cyc(4));
  CHECK(m2 == Cyc::zeta(3) * Cyc(Rat(1, 8)));
  CHECK(m1.pow(3) * m2 * m2 == Cyc(-1));
  auto [k1, k2] = representative_lambdas({10});
  CHECK(k1 == Cyc(2));
  CHECK(k2 == Cyc(1));
}

TEST_CASE("character shifts") {
  auto [a, b] = shift(Cyc(2), Cyc(3), 0, 0);
  CHECK(a == Cyc(2));
  CHECK(b == Cyc(3));
  // I2 with lambda2 = 2, shifted by chi_1, lands in I3
  auto [s1, s2] = shift(Cyc(1), Cyc(2), 1, 0);
  CHECK(s1 == Cyc::zeta(8));
  CHECK(s2 == Cyc(2) * Cyc::zeta(11));
  CHECK(classify(s1, s2).index == 3);
  // I10 is chi_2-stable
  auto [t1, t2] = shift(Cyc(2), Cyc(1), 0, 1);
  CHECK(t1 == Cyc(2) * Cyc::zeta(11));
  CHECK(t2 == Cyc(1));
  CHECK(classify(t1, t2).index == 10);
}

TEST_CASE("class-1 corollary shifts land in the stated families") {
  const int shifts[9][3] = {{2, 1, 0}, {3, 2, 0}, {4, 2, 1}, {5, 4, 2}, {6, 3, 2},
                            {7, 1, 1}, {8, 2, 2}, {9, 3, 3}, {10, 0, 1}};
  const int targets[9] = {3, 2, 5, 4, 6, 9, 8, 7, 10};
  for (int i = 0; i < 9; ++i) {
    auto [l1, l2] = representative_lambdas({shifts[i][0]});
    auto [s1, s2] = shift(l1, l2, shifts[i][1], shifts[i][2]);
    CHECK(classify(s1, s2).index == targets[i]);
  }
}

TEST_CASE("shapovalov vanishing matches conditions and classification") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(2, 9);
  auto check_one = [](const Cyc& l1, const Cyc& l2) {
    auto c = conditions(l1, l2);
    bool any = false;
    int count = 0;
    for (bool x : c) { any |= x; count += x; }
    FamilyId f = classify(l1, l2);
    CHECK(shapovalov(l1, l2).is_zero() == any);
    CHECK((f.index != 1) == any);
    CHECK(f.cls() == count);
  };
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) check_one(Cyc::zeta(i), Cyc::zeta(j));
  for (int t = 0; t < 50; ++t) {
    Cyc l1(num(rng)), l2(num(rng));
    check_one(l1, l2);
  }
}

TEST_CASE("table 1 data: phi is a dimension-preserving involution") {
  const auto& rows = table1();
  CHECK(rows.size() == 47);
  for (const auto& r : rows) {
    const auto& phi = rows[static_cast<size_t>(r.phi_family - 1)];
    CHECK(phi.phi_family == r.family);
    CHECK(phi.dim == r.dim);
  }
  CHECK(rows[0].dim == 144);
  CHECK(rows[0].max_degree == Degree{12, 8});
  CHECK(rows[46].dim == 1);
}
