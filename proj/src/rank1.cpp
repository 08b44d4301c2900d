#include "ufo7/rank1.hpp"

#include <stdexcept>

namespace ufo7 {

Rank1Params::Rank1Params(int n_, Cyc q_, Cyc lam_)
    : n(n_), q(std::move(q_)), lam(std::move(lam_)) {
  if (n < 2) throw std::domain_error("rank1: N must be >= 2");
  auto ord = q.root_of_unity_order();
  if (!ord || *ord != n)
    throw std::domain_error("rank1: q must be a primitive N-th root of unity");
  if (lam.is_zero()) throw std::domain_error("rank1: lam must be nonzero");
}

int rank1_dim(const Rank1Params& p) {
  Cyc qpow(1); // q^{1-j} for j = 1, 2, ...
  for (int j = 1; j <= p.n; ++j) {
    if (p.lam == qpow) return j;
    qpow *= p.q.inv();
  }
  return p.n;
}

namespace {

Cyc qint(int j, const Cyc& q) { // (j)_q
  Cyc s(0), pw(1);
  for (int i = 0; i < j; ++i) {
    s += pw;
    pw *= q;
  }
  return s;
}

} // namespace

int rank1_oracle(const Rank1Params& p) {
  // Verma on v_0..v_{N-1}, v_j = E^j v.  From
  // E^j F - F E^j = (j)_q E^{j-1} (g - q^{1-j} sigma^{-1}):
  //   F v_j = -(j)_q (lg - q^{1-j} ls^{-1}) v_{j-1},
  // with any splitting lam = lg * ls; use lg = lam, ls = 1.
  // Radical recursion: N_0 = 0, N_j = { v in k v_j : F v in N_{j-1} },
  // a chain, so dim L = first j >= 1 with F v_j = 0 (or N if none).
  Cyc lg = p.lam, ls(1);
  for (int j = 1; j < p.n; ++j) {
    Cyc c = qint(j, p.q) * (lg - p.q.pow(1 - j) * ls.inv());
    if (c.is_zero()) return j;
  }
  return p.n;
}

Rank1Action rank1_basis_action(const Rank1Params& p, const Cyc& lg, const Cyc& ls) {
  if ((lg * ls) != p.lam)
    throw std::domain_error("rank1_basis_action: lg*ls must equal lam");
  Rank1Action act;
  act.dim = rank1_dim(p);
  act.f_coeff.resize(static_cast<size_t>(act.dim));
  act.g_scalar.resize(static_cast<size_t>(act.dim));
  act.s_scalar.resize(static_cast<size_t>(act.dim));
  for (int i = 0; i < act.dim; ++i) {
    // F v_i = (i)_q (q^{1-i} ls^{-1} - lg) v_{i-1}
    act.f_coeff[static_cast<size_t>(i)] =
        qint(i, p.q) * (p.q.pow(1 - i) * ls.inv() - lg);
    act.g_scalar[static_cast<size_t>(i)] = lg * p.q.pow(i);
    act.s_scalar[static_cast<size_t>(i)] = ls * p.q.pow(i);
  }
  return act;
}

} // namespace ufo7
