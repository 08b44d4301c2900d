#ifndef UFO7_WEIGHTS_HPP
#define UFO7_WEIGHTS_HPP

#include <array>
#include <utility>

#include "ufo7/algebra.hpp"
#include "ufo7/cyclotomic.hpp"

namespace ufo7 {

/// Character data of a weight: the four values lambda(g1), lambda(g2),
/// lambda(sigma1), lambda(sigma2), all nonzero, plus the braiding.
/// Everything module-theoretic factors through these scalars.
struct WeightParams {
  Cyc lg1, lg2, ls1, ls2;
  BraidingData q;

  WeightParams(Cyc g1, Cyc g2, Cyc s1, Cyc s2, BraidingData braiding);

  Cyc lambda1() const { return lg1 * ls1; }
  Cyc lambda2() const { return lg2 * ls2; }
};

/// One of the 47 weight families; class j = number of Shapovalov
/// conditions satisfied (0 for family 1, 1 for 2..10, 2 for 11..47).
struct FamilyId {
  int index = 0;
  int cls() const { return index == 1 ? 0 : (index <= 10 ? 1 : 2); }
  auto operator<=>(const FamilyId&) const = default;
};

struct Table1Row {
  int family;
  int dim;
  Degree max_degree;
  int phi_family;
};

/// The five Shapovalov conditions on (lambda1, lambda2):
/// l1 in {1, z^8}; l1^2 l2 in {-1, z^10}; l1^3 l2^2 = -1;
/// l1 l2 in {z, z^4, z^7}; l2 = 1.
std::array<bool, 5> conditions(const Cyc& l1, const Cyc& l2);

/// The unique family whose defining predicate holds.  Throws
/// std::logic_error if no family matches (indicates a transcription bug).
FamilyId classify(const Cyc& l1, const Cyc& l2);

/// Exact value of the nine-factor Shapovalov product.
Cyc shapovalov(const Cyc& l1, const Cyc& l2);

/// Deterministic representative weight of a family.  Convention:
/// lg1 = lambda1, ls1 = 1, lg2 = lambda2, ls2 = 1, q12 = 1; free parameters
/// use 2, and family 6 uses lambda1 = 4, lambda2 = z^3/8.
WeightParams representative(FamilyId f);
std::pair<Cyc, Cyc> representative_lambdas(FamilyId f);

/// (lambda1, lambda2) of chi_1^a chi_2^b lambda:
/// (l1 z^{8a+11b}, l2 z^{11a}).
std::pair<Cyc, Cyc> shift(const Cyc& l1, const Cyc& l2, int a, int b);

/// The 47 rows of the published dimension table, embedded as data.
const std::array<Table1Row, 47>& table1();

} // namespace ufo7

#endif
