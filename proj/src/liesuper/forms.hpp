#ifndef LIESUPER_FORMS_HPP
#define LIESUPER_FORMS_HPP

#include "liesuper/algebra.hpp"

namespace liesuper {

// Supersymmetric bilinear form J(v, w) = (-1)^{|v||w|} J(w, v) on V.
// Even J pairs equal parities (J_0 symmetric, J_1 antisymmetric); odd J
// pairs V_0 with V_1 and forces dim V_0 = dim V_1.  Construction validates
// supersymmetry, block structure and nondegeneracy.
class BilinearForm {
public:
  BilinearForm(GradedDim ambient, Parity parity, Matrix j);

  GradedDim ambient() const { return ambient_; }
  Parity parity() const { return parity_; }
  const Matrix& matrix() const { return matrix_; }

  // diag(I_m, Omega_{2n}) on C^{m|2n}
  static BilinearForm standard_even(GradedDim ambient);
  // [[0, I], [I, 0]] on C^{n|n}
  static BilinearForm standard_odd(GradedDim ambient);

private:
  GradedDim ambient_;
  Parity parity_;
  Matrix matrix_;
};

// Solution space of J(Av, w) + (-1)^{|A||v|} J(v, Aw) = 0 in gl(V):
// osp(V, J) for even J, p(V, J) for odd J.
SuperAlgebraBasis osp_algebra(const BilinearForm& j);
SuperAlgebraBasis p_algebra(const BilinearForm& j);

} // namespace liesuper

#endif
