#ifndef UFO7_RANK1_HPP
#define UFO7_RANK1_HPP

#include <vector>

#include "ufo7/cyclotomic.hpp"

namespace ufo7 {

/// Parameters of the rank-one double: q a primitive N-th root of unity in
/// Q(zeta_12) (so N in {2,3,4,6,12}) and lam = lambda(g sigma) != 0.
struct Rank1Params {
  int n;
  Cyc q;
  Cyc lam;

  Rank1Params(int n_, Cyc q_, Cyc lam_);
};

/// dim L(lambda) by the closed form: min { j in 1..N : lam = q^{1-j} },
/// and N when lam is not such a power.
int rank1_dim(const Rank1Params& p);

/// Brute-force check: builds the N-dimensional Verma on E^k v with the
/// F-action from the commutation rule, runs the radical recursion, returns
/// the dimension of the simple quotient.
int rank1_oracle(const Rank1Params& p);

struct Rank1Action {
  int dim;
  // F v_i = f_coeff[i] v_{i-1}; E v_i = v_{i+1} (v_dim = 0); g, sigma act on
  // v_i by g_scalar[i], s_scalar[i]
  std::vector<Cyc> f_coeff;
  std::vector<Cyc> g_scalar;
  std::vector<Cyc> s_scalar;
};

/// The basis action of the Lemma, for a chosen splitting lam = lg * ls.
Rank1Action rank1_basis_action(const Rank1Params& p, const Cyc& lg, const Cyc& ls);

} // namespace ufo7

#endif
