#include "ufo7/weights.hpp"

#include <stdexcept>

namespace ufo7 {

WeightParams::WeightParams(Cyc g1, Cyc g2, Cyc s1, Cyc s2, BraidingData braiding)
    : lg1(std::move(g1)), lg2(std::move(g2)), ls1(std::move(s1)), ls2(std::move(s2)),
      q(std::move(braiding)) {
  if (lg1.is_zero() || lg2.is_zero() || ls1.is_zero() || ls2.is_zero())
    throw std::domain_error("weight values must be invertible");
}

namespace {

bool in_set(const Cyc& x, std::initializer_list<int> zeta_powers) {
  for (int k : zeta_powers)
    if (x == Cyc::zeta(k)) return true;
  return false;
}

} // namespace

std::array<bool, 5> conditions(const Cyc& l1, const Cyc& l2) {
  Cyc l1sq = l1 * l1;
  return {
      in_set(l1, {0, 8}),
      in_set(l1sq * l2, {6, 10}),
      l1sq * l1 * l2 * l2 == Cyc::zeta(6),
      in_set(l1 * l2, {1, 4, 7}),
      l2.is_one(),
  };
}

FamilyId classify(const Cyc& l1, const Cyc& l2) {
  if (l1.is_zero() || l2.is_zero())
    throw std::domain_error("classify: weight values must be nonzero");
  auto c = conditions(l1, l2);
  int count = 0;
  for (bool b : c) count += b;

  if (count == 0) return {1};

  if (count == 1) {
    if (c[0]) return {l1.is_one() ? 2 : 3};
    if (c[1]) return {l1 * l1 * l2 == Cyc::zeta(6) ? 4 : 5};
    if (c[2]) return {6};
    if (c[3]) {
      Cyc t = l1 * l2;
      return {t == Cyc::zeta(1) ? 7 : (t == Cyc::zeta(4) ? 8 : 9)};
    }
    return {10};
  }

  // the 37 point families of class 2, as (zeta-power of l1, of l2)
  static constexpr std::array<std::pair<int, int>, 37> points = {{
      {0, 1}, {0, 4}, {0, 7}, {0, 3}, {0, 9}, {0, 6}, {0, 10},         // 11..17
      {8, 5}, {8, 8}, {8, 11}, {8, 3}, {8, 9}, {8, 2}, {8, 6},         // 18..24
      {11, 8}, {5, 8}, {4, 9}, {9, 4}, {6, 6}, {2, 2}, {6, 10},        // 25..31
      {10, 6}, {2, 6}, {4, 3}, {3, 4},                                 // 32..35
      {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}, {8, 0},  // 36..43
      {9, 0}, {10, 0}, {11, 0}, {0, 0},                                // 44..47
  }};
  for (size_t i = 0; i < points.size(); ++i) {
    if (l1 == Cyc::zeta(points[i].first) && l2 == Cyc::zeta(points[i].second))
      return {static_cast<int>(i) + 11};
  }
  throw std::logic_error("classify: no family matched");
}

Cyc shapovalov(const Cyc& l1, const Cyc& l2) {
  Cyc i1 = l1.inv(), i2 = l2.inv();
  Cyc i1sq = i1 * i1;
  auto z = [](int k) { return Cyc::zeta(k); };
  Cyc a = z(2) * i1sq * i2;      // z^2 l1^-2 l2^-1
  Cyc b = z(10) * i1 * i2;       // z^10 l1^-1 l2^-1
  Cyc sh = (z(4) * i1 - z(4)) * (z(4) * i1 - z(8));
  sh *= (a - z(8)) * (a - z(4));
  sh *= i1sq * i1 * i2 * i2 + Cyc(1);
  sh *= (b - z(9)) * (b + Cyc(1)) * (b - z(3));
  sh *= i2 - Cyc(1);
  return sh;
}

std::pair<Cyc, Cyc> representative_lambdas(FamilyId f) {
  auto z = [](int k) { return Cyc::zeta(k); };
  Cyc two(2);
  Cyc half(Rat(1, 2));
  switch (f.index) {
    case 1: return {two, Cyc(3)};
    case 2: return {Cyc(1), two};
    case 3: return {z(8), two};
    case 4: return {two, Cyc(Rat(-1, 4))};
    case 5: return {two, z(10) * Cyc(Rat(1, 4))};
    case 6: return {Cyc(4), z(3) * Cyc(Rat(1, 8))};
    case 7: return {two, z(1) * half};
    case 8: return {two, z(4) * half};
    case 9: return {two, z(7) * half};
    case 10: return {two, Cyc(1)};
    default: break;
  }
  static constexpr std::array<std::pair<int, int>, 37> points = {{
      {0, 1}, {0, 4}, {0, 7}, {0, 3}, {0, 9}, {0, 6}, {0, 10},
      {8, 5}, {8, 8}, {8, 11}, {8, 3}, {8, 9}, {8, 2}, {8, 6},
      {11, 8}, {5, 8}, {4, 9}, {9, 4}, {6, 6}, {2, 2}, {6, 10},
      {10, 6}, {2, 6}, {4, 3}, {3, 4},
      {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}, {8, 0},
      {9, 0}, {10, 0}, {11, 0}, {0, 0},
  }};
  if (f.index >= 11 && f.index <= 47) {
    auto [k1, k2] = points[static_cast<size_t>(f.index - 11)];
    return {z(k1), z(k2)};
  }
  throw std::domain_error("representative: family index out of range");
}

WeightParams representative(FamilyId f) {
  auto [l1, l2] = representative_lambdas(f);
  return WeightParams(l1, l2, Cyc(1), Cyc(1), BraidingData::with_q12(Cyc(1)));
}

std::pair<Cyc, Cyc> shift(const Cyc& l1, const Cyc& l2, int a, int b) {
  return {l1 * Cyc::zeta(8 * a + 11 * b), l2 * Cyc::zeta(11 * a)};
}

const std::array<Table1Row, 47>& table1() {
  static const std::array<Table1Row, 47> rows = {{
      {1, 144, {12, 8}, 1},   {2, 48, {10, 8}, 2},   {3, 96, {11, 8}, 3},
      {4, 48, {8, 6}, 4},     {5, 96, {10, 7}, 5},   {6, 72, {9, 6}, 6},
      {7, 36, {9, 5}, 7},     {8, 72, {10, 6}, 8},   {9, 108, {11, 7}, 9},
      {10, 72, {12, 7}, 10},  {11, 11, {5, 4}, 12},  {12, 11, {5, 4}, 11},
      {13, 23, {7, 5}, 44},   {14, 25, {7, 5}, 28},  {15, 37, {9, 6}, 41},
      {16, 37, {8, 6}, 30},   {17, 47, {10, 7}, 46}, {18, 11, {5, 3}, 38},
      {19, 35, {8, 5}, 40},   {20, 71, {11, 7}, 42}, {21, 61, {9, 6}, 32},
      {22, 49, {9, 6}, 45},   {23, 47, {8, 6}, 29},  {24, 85, {10, 7}, 35},
      {25, 37, {8, 5}, 37},   {26, 25, {8, 5}, 43},  {27, 35, {9, 5}, 36},
      {28, 25, {7, 5}, 14},   {29, 47, {8, 6}, 23},  {30, 37, {8, 6}, 16},
      {31, 61, {10, 6}, 39},  {32, 61, {9, 6}, 21},  {33, 71, {9, 6}, 34},
      {34, 71, {9, 6}, 33},   {35, 85, {10, 7}, 24}, {36, 35, {9, 5}, 27},
      {37, 37, {8, 5}, 25},   {38, 11, {5, 3}, 18},  {39, 61, {10, 6}, 31},
      {40, 35, {8, 5}, 19},   {41, 37, {9, 6}, 15},  {42, 71, {11, 7}, 20},
      {43, 25, {8, 5}, 26},   {44, 23, {7, 5}, 13},  {45, 49, {9, 6}, 22},
      {46, 47, {10, 7}, 17},  {47, 1, {0, 0}, 47},
  }};
  return rows;
}

} // namespace ufo7
