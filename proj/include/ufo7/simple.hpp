#ifndef UFO7_SIMPLE_HPP
#define UFO7_SIMPLE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ufo7/verma.hpp"

namespace ufo7 {

/// Per-degree reduced echelon bases over Q(zeta); pivots are eliminated in
/// global PBW index order, so outputs are deterministic.
class GradedSubspace {
public:
  struct Row {
    int pivot;
    ModuleVector v; // v[pivot] = 1, fully reduced against the other rows
  };

  int dim() const;
  int dim_at(Degree d) const;
  const std::vector<Row>& rows_at(Degree d) const;

  /// Residual of vec after eliminating this subspace's pivots (vec must be
  /// homogeneous of degree d).
  ModuleVector reduce(Degree d, const ModuleVector& vec) const;
  bool contains(Degree d, const ModuleVector& vec) const;

  /// Echelon-inserts; returns false when vec reduces to zero.
  bool insert(Degree d, ModuleVector vec);

  const std::map<Degree, std::vector<Row>>& by_degree() const { return rows_; }

private:
  std::map<Degree, std::vector<Row>> rows_;
};

/// The unique maximal graded submodule avoiding v_lambda, by the degree
/// recursion N_0 = 0, N_beta = { v : F_i v in N_{beta - alpha_i} }.
GradedSubspace maximal_submodule(const VermaModule& m);

/// Submodule-closure certificate: all four generator matrices map N into N.
bool is_submodule(const VermaModule& m, const GradedSubspace& n);

struct SimpleReport {
  FamilyId family;
  Cyc lambda1, lambda2;
  int dim = 0;
  std::map<Degree, int> graded_dims;
  Degree max_degree;
  std::pair<Cyc, Cyc> hw_weight;
  FamilyId phi_family;
};

SimpleReport simple_report(const WeightParams& p);
SimpleReport simple_report(const VermaModule& m, const GradedSubspace& n);

/// True iff dim L at the maximal degree is 1 and the top vector is
/// annihilated by E1, E2 modulo N.
bool check_top_is_simple(const VermaModule& m, const GradedSubspace& n);

/// One monomial of a published basis description.
struct BasisEntry {
  PbwOrder order;
  int a, b, c, d, e;
};

/// The basis B_f of L(lambda) for each of the 47 families, as data.
std::vector<BasisEntry> family_basis(FamilyId f);

struct FamilyBasisReport {
  FamilyId family;
  int listed = 0;
  int rank = 0;
  int dim_l = 0;
  std::vector<BasisEntry> dependent; // entries whose image failed to grow the rank
  bool ok() const { return listed == rank && rank == dim_l; }
};

FamilyBasisReport check_family_basis(FamilyId f, const VermaModule& m,
                                     const GradedSubspace& n);

/// One row of a published action table.
struct ActionTableRow {
  int i, j;            // degree label of the basis vector
  BasisEntry monomial; // its PBW monomial
  struct Entry {
    bool present = false;
    Cyc c;
    int ti = 0, tj = 0; // target label
  };
  Entry e1, e2, f1, f2;
};

/// Normalization of the two F-columns, as each printed table follows.
enum class F1Norm { SigmaInv, GInv }; // compare ls1 * F1 w  vs  lg1^-1 * F1 w
enum class F2Norm { SigmaInv, GInv };

struct ActionTable {
  int family;
  F1Norm f1norm;
  F2Norm f2norm;
  std::vector<ActionTableRow> rows;
};

/// Tables for families 11, 12, 18, 38, exactly as printed.
ActionTable action_table(int family, const BraidingData& q);

struct ActionTableReport {
  int family = 0;
  bool labels_ok = false;        // graded dims of L match the (i,j) labels
  bool basis_ok = false;         // the listed vectors are a basis of L
  int entries_total = 0;         // nonzero printed entries
  int entries_matched = 0;
  std::vector<std::string> mismatches;
  double match_fraction() const {
    return entries_total ? double(entries_matched) / entries_total : 1.0;
  }
};

ActionTableReport check_action_table(int family, const VermaModule& m,
                                     const GradedSubspace& n);

struct Class1Report {
  FamilyId family;
  int dim_n = 0;
  FamilyId shifted_family;
  FamilyId expected_family;
  int dim_l_shifted = 0;
  bool ok() const {
    return shifted_family == expected_family && dim_n == dim_l_shifted;
  }
};

/// Character shift (a, b) and target family of the corollary for families
/// 2..10: N(lambda) is the simple module at chi_1^a chi_2^b lambda.
struct Class1Shift { int a, b, target; };
Class1Shift class1_shift(int family);

Class1Report class1_corollary_check(int family);

} // namespace ufo7

#endif
