#ifndef LIESUPER_CLIFFORD_HPP
#define LIESUPER_CLIFFORD_HPP

#include "liesuper/algebra.hpp"

namespace liesuper {

// Gamma matrices for signature eta = diag(+1 x p, -1 x q) acting on a spinor
// space of dimension 2^floor((p+q)/2), entries in Q(i).
struct CliffordRep {
  int p = 0, q = 0;
  std::size_t spinor_dim = 0;
  std::vector<Matrix> gammas;
};

CliffordRep clifford_rep(int p, int q);

// Spin representation of an so(p, q) generator a (so that
// [rho(a), gamma(v)] = gamma(a v)).
Matrix spin_action(const CliffordRep& rep, const Matrix& a);

// spin(p, q) + W inside gl(C^{(p+q) | 2^floor((p+q)/2)}): even part the
// so-generators acting standardly on V_0 and through the spin representation
// on spinors, odd part W = { f_s : v -> gamma(v) s }.
SuperAlgebraBasis spin_w_algebra(int p, int q);

} // namespace liesuper

#endif
