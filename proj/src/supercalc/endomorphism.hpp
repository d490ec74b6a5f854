#ifndef SUPERCALC_ENDOMORPHISM_HPP
#define SUPERCALC_ENDOMORPHISM_HPP

#include "supercalc/vectorfield.hpp"

#include <map>

namespace supercalc {

// Endomorphism of a polynomial superdomain, stored as the pullback images
// of the coordinates.  Component c must be homogeneous of the parity of
// coordinate c.
class SuperDomainMap {
public:
  SuperDomainMap(std::size_t n_even, std::size_t n_odd, std::vector<GrassmannPoly> components);

  static SuperDomainMap identity(std::size_t n_even, std::size_t n_odd);

  std::size_t n_even() const { return n_even_; }
  std::size_t n_odd() const { return n_odd_; }
  const GrassmannPoly& component(std::size_t c) const { return components_[c]; }
  const std::vector<GrassmannPoly>& components() const { return components_; }

  GrassmannPoly pullback(const GrassmannPoly& f) const { return f.substitute(components_); }

  friend bool operator==(const SuperDomainMap& a, const SuperDomainMap& b) {
    return a.n_even_ == b.n_even_ && a.n_odd_ == b.n_odd_ && a.components_ == b.components_;
  }

private:
  std::size_t n_even_, n_odd_;
  std::vector<GrassmannPoly> components_;
};

using GMatrix = std::vector<std::vector<GrassmannPoly>>;

GMatrix gm_identity(std::size_t n_even, std::size_t n_odd, std::size_t size);
GMatrix gm_mul(const GMatrix& a, const GMatrix& b);
GMatrix gm_pullback(const SuperDomainMap& f, const GMatrix& a);

// Jf with row i, column j = d_{p_i} f^#(q_j).
GMatrix jacobian(const SuperDomainMap& f);

// Exact inverse over the Grassmann ring; requires the body block to have a
// nonzero constant determinant (the polynomial-automorphism case).  Throws
// std::domain_error otherwise.
GMatrix gm_inverse(const GMatrix& a);

// The {1}-structure automorphism criterion Jf = A^{-1} f^#(A), tested in
// the division-free form A * Jf = f^#(A).
bool is_parallelization_automorphism(const SuperDomainMap& f, const GMatrix& a);

// ---- families over odd parameters -----------------------------------
//
// A family over A(C^{0|n_params}) is given by components over the combined
// algebra whose first n_params odd generators are the parameters.  It
// factors uniquely as
//   phi^# = prod_{k=n}^{1} (1 + sum_{max I = k} eta^I X_I) . phi_0^#
// with X_I a domain vector field of parity |I|.

struct FamilyDecomposition {
  SuperDomainMap base;
  std::map<OddMask, SuperVectorField> fields; // keyed by parameter mask
};

FamilyDecomposition family_decompose(std::size_t n_params, std::size_t n_even, std::size_t n_odd,
                                     const std::vector<GrassmannPoly>& components);

std::vector<GrassmannPoly> family_recompose(std::size_t n_params, const SuperDomainMap& base,
                                            const std::map<OddMask, SuperVectorField>& fields);

// Lemma-style family test for a parallelization with frame coefficient
// matrix A: the base map must satisfy the automorphism criterion and every
// X_I must commute with the frame fields.
bool family_is_parallelization_automorphism(std::size_t n_params,
                                            const std::vector<GrassmannPoly>& components,
                                            const std::vector<SuperVectorField>& frame);

} // namespace supercalc

#endif
