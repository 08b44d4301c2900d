#ifndef UFO7_VERMA_HPP
#define UFO7_VERMA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ufo7/algebra.hpp"
#include "ufo7/weights.hpp"

namespace ufo7 {

/// Dense exact vector over the 144 PBW basis monomials (global index order).
class ModuleVector {
public:
  ModuleVector() : c_(PbwExp::kCount) {}
  static ModuleVector basis(int idx);
  static ModuleVector from_element(const AlgebraElement& e);

  const Cyc& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Cyc& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  bool is_zero() const;
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& axpy(const Cyc& a, const ModuleVector& x); // *this += a*x
  ModuleVector scaled(const Cyc& a) const;
  friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b);
  bool operator==(const ModuleVector& o) const { return c_ == o.c_; }
  AlgebraElement to_element() const;
  int nonzeros() const;

private:
  std::vector<Cyc> c_;
};

/// 144 x 144 exact matrix, stored as columns.
using Matrix = std::vector<ModuleVector>;

ModuleVector apply(const Matrix& m, const ModuleVector& v);
Matrix compose(const Matrix& a, const Matrix& b); // a after b
Matrix matrix_sub(const Matrix& a, const Matrix& b);
Matrix matrix_scale(const Matrix& a, const Cyc& c);
bool matrix_is_zero(const Matrix& m);
int matrix_nonzeros(const Matrix& m);
Matrix identity_matrix();

enum class GroupGen { g1, g2, s1, s2 };

enum class PbwOrder { PBW1, PBW2 };

/// The nine singular-vector constructions.
enum class SingularKind {
  W1Generator,   // m~_{0,0,0,0,1},      hypothesis lambda1 = 1
  W2Generator,   // m~_{0,0,0,0,2},      hypothesis lambda1 = z^8
  WGenerator,    // n~_{1,0,0,0,0},      hypothesis lambda2 = 1
  E112,          // F1^2 E112 E1^2 v,    hypothesis l1^2 l2 = -1
  E112Sq,        // F1^2 E112^2 E1^2 v,  hypothesis l1^2 l2 = z^10
  E11212,        // F1^2 F112^2 E11212 E112^2 E1^2 v, hypothesis l1^3 l2^2 = -1
  E12,           // F2 E2 E12 v,         hypothesis l1 l2 = z
  E12Sq,         // F2 E2 E12^2 v,       hypothesis l1 l2 = z^4
  E12Cube,       // F2 E2 E12^3 v,       hypothesis l1 l2 = z^7
};
constexpr int kSingularKindCount = 9;
const char* singular_kind_name(SingularKind k);

struct RelationResult {
  std::string name;
  bool passed = false;
  int residual_nonzeros = 0;
  bool quarantined = false;
  std::string note;
};

struct RelationReport {
  std::vector<RelationResult> entries;
  /// True when every non-quarantined identity holds exactly.
  bool trusted_ok() const;
  int failed_count() const;
};

/// M(lambda) on the 144 PBW monomials: exact matrices for the four
/// generators plus diagonal group scalars per degree.
class VermaModule {
public:
  explicit VermaModule(const WeightParams& p);

  const WeightParams& params() const { return p_; }
  const RewriteSystem& rewrite() const { return *rw_; }

  const Matrix& e1() const { return e1_; }
  const Matrix& e2() const { return e2_; }
  const Matrix& f1() const { return f1_; }
  const Matrix& f2() const { return f2_; }

  /// Scalar by which the group generator acts on any vector of degree beta.
  Cyc group_scalar(GroupGen g, Degree beta) const;
  /// Diagonal matrix of a group word g1^a g2^b s1^c s2^d.
  Matrix group_matrix(int a, int b, int c, int d) const;

  Degree degree_of(int idx) const { return degs_[static_cast<size_t>(idx)]; }
  const std::map<Degree, std::vector<int>>& degree_index() const { return by_degree_; }

  /// m~ (PBW1) or n~ (PBW2) vector; zero exactly when an exponent is out of
  /// range, mirroring the nonvanishing criterion of the basis families.
  ModuleVector pbw_vector(int a, int b, int c, int d, int e, PbwOrder order) const;

  ModuleVector singular_vector(SingularKind k) const;
  /// Whether the (lambda1, lambda2) hypothesis of the construction holds.
  bool singular_hypothesis(SingularKind k) const;

  /// Evaluates the defining relations, the straightening catalogs (E-side
  /// and mirrored F-side), and the cross-relation catalog as exact operator
  /// identities; failures are report entries, with known transcription
  /// slips quarantined alongside their corrected forms.
  RelationReport verify_relations() const;

  /// Root-vector operator matrices.
  Matrix root_matrix_e(Letter l) const;
  Matrix root_matrix_f(Letter l) const;

private:
  WeightParams p_;
  std::shared_ptr<const RewriteSystem> rw_;
  Matrix e1_, e2_, f1_, f2_;
  std::vector<Degree> degs_;
  std::map<Degree, std::vector<int>> by_degree_;

  void build();
};

} // namespace ufo7

#endif
