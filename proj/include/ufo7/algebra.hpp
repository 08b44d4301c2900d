#ifndef UFO7_ALGEBRA_HPP
#define UFO7_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ufo7/cyclotomic.hpp"

namespace ufo7 {

/// Z^2-degree (b1, b2) = multiplicity of alpha_1, alpha_2.
struct Degree {
  int b1 = 0;
  int b2 = 0;
  friend Degree operator+(Degree a, Degree b) { return {a.b1 + b.b1, a.b2 + b.b2}; }
  friend Degree operator-(Degree a, Degree b) { return {a.b1 - b.b1, a.b2 - b.b2}; }
  auto operator<=>(const Degree&) const = default;
  int total() const { return b1 + b2; }
};

/// PBW generators in normal order: a normal word is non-decreasing in this
/// enumeration, i.e. reads E2^a E12^b E11212^c E112^d E1^e left to right.
enum Letter : int { E2 = 0, E12 = 1, E11212 = 2, E112 = 3, E1 = 4 };

constexpr int kLetterCount = 5;
constexpr std::array<int, kLetterCount> kLetterHeight = {2, 4, 2, 3, 3};
constexpr std::array<Degree, kLetterCount> kLetterDegree = {
    Degree{0, 1}, Degree{1, 1}, Degree{3, 2}, Degree{2, 1}, Degree{1, 0}};
const char* letter_name(Letter l);

using Word = std::vector<Letter>;
Degree word_degree(const Word& w);

/// Exponent tuple of a PBW1 monomial E2^a2 E12^a12 E11212^a11212 E112^a112 E1^a1.
/// Exactly 144 legal tuples; the global index is the mixed-radix value below
/// and fixes the basis enumeration everywhere in the project.
struct PbwExp {
  int a2 = 0, a12 = 0, a11212 = 0, a112 = 0, a1 = 0;

  static constexpr int kCount = 144;
  int index() const { return ((a2 * 4 + a12) * 2 + a11212) * 3 * 3 + a112 * 3 + a1; }
  static PbwExp from_index(int i);
  Degree degree() const {
    return {a12 + 3 * a11212 + 2 * a112 + a1, a2 + a12 + 2 * a11212 + a112};
  }
  Word word() const;
  int exponent(Letter l) const;
  bool in_range() const {
    return a2 >= 0 && a2 <= 1 && a12 >= 0 && a12 <= 3 && a11212 >= 0 &&
           a11212 <= 1 && a112 >= 0 && a112 <= 2 && a1 >= 0 && a1 <= 2;
  }
  auto operator<=>(const PbwExp&) const = default;
  std::string str() const;
};

/// Braiding matrix of ufo(7): q11 = z^4, q22 = -1, q12 free nonzero and
/// q21 = z^11 / q12.
struct BraidingData {
  Cyc q11 = Cyc::zeta(4);
  Cyc q12 = Cyc(1);
  Cyc q21 = Cyc::zeta(11);
  Cyc q22 = Cyc::zeta(6);

  static BraidingData with_q12(const Cyc& q12);
  /// Entry q_ij for i, j in {1, 2}.
  const Cyc& q(int i, int j) const;
};

/// Element of U^+ in PBW1 normal form: finitely supported map from the
/// global monomial index to coefficients.  No stored zeros.
class AlgebraElement {
public:
  AlgebraElement() = default;
  static AlgebraElement monomial(const PbwExp& e, const Cyc& c = Cyc(1));
  static AlgebraElement unit() { return monomial(PbwExp{}); }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<int, Cyc>& terms() const { return terms_; }
  Cyc coeff(const PbwExp& e) const;

  void add_term(int idx, const Cyc& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(const Cyc& c) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

  /// Degree shared by all terms; false if zero or inhomogeneous.
  bool homogeneous_degree(Degree* out) const;
  std::string str() const;

private:
  std::map<int, Cyc> terms_;
};

/// A word over the two generators only (E1 and E2 letters).
using GenWord = std::vector<Letter>;

enum class Strategy { LeftmostInnermost, RightmostInnermost };

struct ConfluenceEntry {
  Word input;
  bool strategies_agree = false;
  std::string note;
};

struct ConfluenceReport {
  std::vector<ConfluenceEntry> mismatches;
  int words_checked = 0;
  bool ok() const { return mismatches.empty(); }
};

/// Catalog identity: LHS word equals the stated combination.  `quarantined`
/// marks entries whose printed source coefficients fail verification; for
/// those the corrected right-hand side derived by the engine is also kept.
struct CatalogRule {
  std::string name;
  Word lhs;
  std::vector<std::pair<Word, Cyc>> rhs;
  bool quarantined = false;
  std::vector<std::pair<Word, Cyc>> corrected_rhs;
};

/// PBW straightening for fixed braiding data.  The complete adjacent-swap
/// rule set consists of the three root-vector definitions, the seven
/// remaining two-letter reorderings, and the five nilpotency rules
/// E1^3 = E2^2 = E112^3 = E11212^2 = E12^4 = 0.
class RewriteSystem {
public:
  explicit RewriteSystem(const BraidingData& q);

  const BraidingData& braiding() const { return q_; }

  /// Normal form of an arbitrary word in root letters.  Degree-preserving
  /// and idempotent on normal monomials.
  AlgebraElement straighten(const Word& w,
                            Strategy s = Strategy::LeftmostInnermost) const;

  /// Left multiplication by one letter, via the precomputed 5 x 144 table.
  AlgebraElement lmul(Letter l, const AlgebraElement& x) const;
  const AlgebraElement& lmul_monomial(Letter l, int idx) const;

  /// x*w*y style application: left-multiplies the letters of w onto x.
  AlgebraElement apply_word(const Word& w, const AlgebraElement& x) const;

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

  /// The monomial written as an exact combination of words in {E1, E2};
  /// straightening the expansion returns the original monomial.
  std::vector<std::pair<GenWord, Cyc>> expand_root_word(const PbwExp& e) const;

  /// Straightens each sample under both strategies and additionally replays
  /// the catalog identities; mismatches are report entries.
  ConfluenceReport check_confluence(const std::vector<Word>& samples) const;

  /// The section-1.1 straightening identities, exactly as printed, with
  /// quarantine flags on the known transcription slips.
  std::vector<CatalogRule> e_catalog() const;

  /// Mirror identities for the F-side (q12 -> q21), used by the module
  /// relation verifier.  Same shape as e_catalog.
  std::vector<CatalogRule> f_catalog() const;

private:
  BraidingData q_;
  // swap_rules_[a][b]: replacement for the out-of-order adjacent pair (a, b),
  // a > b in normal order
  std::array<std::array<std::vector<std::pair<Word, Cyc>>, kLetterCount>, kLetterCount> swap_rules_;
  std::array<std::array<AlgebraElement, PbwExp::kCount>, kLetterCount> lmul_table_;

  AlgebraElement straighten_worklist(std::map<Word, Cyc> work, Strategy s) const;
  static std::vector<CatalogRule> catalog_for(const Cyc& p);
};

} // namespace ufo7

#endif
