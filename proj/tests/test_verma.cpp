#include <doctest.h>

#include <set>

#include "ufo7/verma.hpp"

using namespace ufo7;

namespace {

WeightParams generic_params() {
  return WeightParams(Cyc(2), Cyc(3), Cyc(1), Cyc(1), BraidingData::with_q12(Cyc(1)));
}

const VermaModule& generic_verma() {
  static VermaModule m(generic_params());
  return m;
}

} // namespace

TEST_CASE("group scalars") {
  WeightParams p(Cyc(5), Cyc(7), Cyc(11), Cyc(13), BraidingData::with_q12(Cyc::zeta(1)));
  VermaModule m(p);
  CHECK(m.group_scalar(GroupGen::g1, {0, 0}) == Cyc(5));
  CHECK(m.group_scalar(GroupGen::g2, {0, 0}) == Cyc(7));
  CHECK(m.group_scalar(GroupGen::s1, {0, 0}) == Cyc(11));
  CHECK(m.group_scalar(GroupGen::s2, {0, 0}) == Cyc(13));

  WeightParams unit(Cyc(1), Cyc(1), Cyc(1), Cyc(1), BraidingData::with_q12(Cyc::zeta(1)));
  VermaModule mu(unit);
  CHECK(mu.group_scalar(GroupGen::g1, {1, 0}) == Cyc::zeta(4));
  CHECK(mu.group_scalar(GroupGen::s2, {0, 1}) == Cyc(-1));
  CHECK(mu.group_scalar(GroupGen::s1, {0, 1}) == unit.q.q21);
  CHECK(mu.group_scalar(GroupGen::g2, {1, 0}) == unit.q.q21);
}

TEST_CASE("graded dimensions are independent of the weight") {
  const VermaModule& m = generic_verma();
  CHECK(m.degree_index().at({1, 0}).size() == 1);
  CHECK(m.degree_index().at({2, 1}).size() == 3);
  CHECK(m.degree_index().at({12, 8}).size() == 1);
  int total = 0;
  for (const auto& [d, idxs] : m.degree_index()) total += static_cast<int>(idxs.size());
  CHECK(total == 144);
}

TEST_CASE("F action on the first level") {
  const VermaModule& m = generic_verma();
  const WeightParams& p = m.params();
  ModuleVector e1v = apply(m.e1(), ModuleVector::basis(0));
  ModuleVector f1e1v = apply(m.f1(), e1v);
  ModuleVector expected = ModuleVector::basis(0).scaled(p.lg1 - p.ls1.inv());
  CHECK(f1e1v == expected);
  CHECK(apply(m.f2(), e1v).is_zero());
}

TEST_CASE("pbw vectors") {
  const VermaModule& m = generic_verma();
  CHECK(m.pbw_vector(0, 0, 0, 0, 0, PbwOrder::PBW1) == ModuleVector::basis(0));
  CHECK(m.pbw_vector(0, 0, 0, 0, 3, PbwOrder::PBW1).is_zero());
  CHECK(m.pbw_vector(2, 0, 0, 0, 0, PbwOrder::PBW2).is_zero());
  CHECK(m.pbw_vector(0, -1, 0, 0, 0, PbwOrder::PBW1).is_zero());
  // n~_{1,0,0,0,1} = E1 E2 v = m~_{0,1,0,0,0} + q12 m~_{1,0,0,0,1}
  ModuleVector n = m.pbw_vector(1, 0, 0, 0, 1, PbwOrder::PBW2);
  ModuleVector expect = ModuleVector::basis(PbwExp{0, 1, 0, 0, 0}.index());
  expect.axpy(m.params().q.q12, ModuleVector::basis(PbwExp{1, 0, 0, 0, 1}.index()));
  CHECK(n == expect);
  // the 144 legal n~ vectors are linearly independent (PBW2 is a basis):
  // build the change of basis and ensure full rank via forward elimination
  std::vector<ModuleVector> rows;
  for (int i = 0; i < PbwExp::kCount; ++i) {
    PbwExp e = PbwExp::from_index(i);
    rows.push_back(m.pbw_vector(e.a2, e.a12, e.a11212, e.a112, e.a1, PbwOrder::PBW2));
  }
  std::set<int> pivots;
  for (auto& v : rows) {
    for (int c = 0; c < PbwExp::kCount; ++c) {
      if (v[c].is_zero() || pivots.count(c)) continue;
      pivots.insert(c);
      break;
    }
  }
  // forward elimination proper
  std::vector<ModuleVector> ech;
  int rank = 0;
  for (ModuleVector v : rows) {
    for (const ModuleVector& r : ech) {
      int piv = 0;
      while (r[piv].is_zero()) ++piv;
      if (!v[piv].is_zero()) v.axpy(-(v[piv] * r[piv].inv()), r);
    }
    if (!v.is_zero()) {
      ++rank;
      ech.push_back(std::move(v));
    }
  }
  CHECK(rank == 144);
}

TEST_CASE("nilpotency heights as operators") {
  const VermaModule& m = generic_verma();
  Matrix e1sq = compose(m.e1(), m.e1());
  CHECK(!matrix_is_zero(e1sq));
  CHECK(matrix_is_zero(compose(e1sq, m.e1())));
  CHECK(matrix_is_zero(compose(m.e2(), m.e2())));
  Matrix f1sq = compose(m.f1(), m.f1());
  CHECK(!matrix_is_zero(f1sq));
  CHECK(matrix_is_zero(compose(f1sq, m.f1())));
  CHECK(matrix_is_zero(compose(m.f2(), m.f2())));
  Matrix f12 = m.root_matrix_f(E12);
  Matrix f12sq = compose(f12, f12);
  CHECK(matrix_is_zero(compose(f12sq, f12sq)));
  CHECK(!matrix_is_zero(compose(f12sq, f12)));
}

TEST_CASE("singular vectors vanish under F exactly when the hypothesis holds") {
  struct Case {
    SingularKind kind;
    Cyc l1, l2; // a weight satisfying the hypothesis
  };
  const Case cases[] = {
      {SingularKind::W1Generator, Cyc(1), Cyc(2)},
      {SingularKind::W2Generator, Cyc::zeta(8), Cyc(2)},
      {SingularKind::WGenerator, Cyc(2), Cyc(1)},
      {SingularKind::E112, Cyc(2), Cyc(Rat(-1, 4))},
      {SingularKind::E112Sq, Cyc(2), Cyc::zeta(10) * Cyc(Rat(1, 4))},
      {SingularKind::E11212, Cyc(4), Cyc::zeta(3) * Cyc(Rat(1, 8))},
      {SingularKind::E12, Cyc(2), Cyc::zeta(1) * Cyc(Rat(1, 2))},
      {SingularKind::E12Sq, Cyc(2), Cyc::zeta(4) * Cyc(Rat(1, 2))},
      {SingularKind::E12Cube, Cyc(2), Cyc::zeta(7) * Cyc(Rat(1, 2))},
  };
  for (const Case& c : cases) {
    WeightParams p(c.l1, c.l2, Cyc(1), Cyc(1), BraidingData::with_q12(Cyc(1)));
    VermaModule m(p);
    REQUIRE(m.singular_hypothesis(c.kind));
    ModuleVector w = m.singular_vector(c.kind);
    CHECK(!w.is_zero());
    CHECK(apply(m.f1(), w).is_zero());
    CHECK(apply(m.f2(), w).is_zero());

    // the cyclic submodule U w is E-generated and misses v_lambda
    std::vector<ModuleVector> frontier = {w};
    bool hits_vlambda = false;
    for (int step = 0; step < 20 && !frontier.empty(); ++step) {
      std::vector<ModuleVector> next;
      for (const ModuleVector& v : frontier) {
        if (!v[0].is_zero()) hits_vlambda = true;
        ModuleVector a = apply(m.e1(), v), b = apply(m.e2(), v);
        if (!a.is_zero()) next.push_back(std::move(a));
        if (!b.is_zero()) next.push_back(std::move(b));
      }
      frontier = std::move(next);
    }
    CHECK(!hits_vlambda);
  }
  // control weight violating every hypothesis
  VermaModule ctrl(generic_params());
  for (const Case& c : cases) {
    CHECK(!ctrl.singular_hypothesis(c.kind));
    ModuleVector w = ctrl.singular_vector(c.kind);
    bool f_annihilates = apply(ctrl.f1(), w).is_zero() && apply(ctrl.f2(), w).is_zero();
    CHECK((!w.is_zero() && !f_annihilates));
  }
}

TEST_CASE("relation suite passes on three parameter sets") {
  const WeightParams params[] = {
      generic_params(),
      WeightParams(Cyc(2), Cyc(3), Cyc::zeta(1), Cyc::zeta(5),
                   BraidingData::with_q12(Cyc::zeta(1))),
      WeightParams(Cyc(Rat(1, 2)), Cyc(5), Cyc(4), Cyc(Rat(1, 5)),
                   BraidingData::with_q12(Cyc::zeta(5))),
  };
  for (const WeightParams& p : params) {
    VermaModule m(p);
    RelationReport rep = m.verify_relations();
    for (const auto& e : rep.entries) {
      INFO(e.name);
      if (!e.quarantined) CHECK(e.passed);
    }
    CHECK(rep.trusted_ok());
    // quarantined printed forms must indeed fail (otherwise the quarantine
    // is stale), except at parameter values where the slip is invisible
    int quarantine_failures = 0;
    for (const auto& e : rep.entries)
      if (e.quarantined && !e.passed) ++quarantine_failures;
    CHECK(quarantine_failures > 0);
  }
}
