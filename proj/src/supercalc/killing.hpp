#ifndef SUPERCALC_KILLING_HPP
#define SUPERCALC_KILLING_HPP

#include "gsalg/matrix.hpp"
#include "supercalc/vectorfield.hpp"

namespace supercalc {

using gsalg::GradedDim;
using gsalg::Matrix;

struct KillingBasis {
  std::size_t n_even = 0, n_odd = 0;
  std::vector<SuperVectorField> even_fields, odd_fields;

  GradedDim dim() const { return {even_fields.size(), odd_fields.size()}; }
  std::vector<const SuperVectorField*> all() const;
};

// Solution space of [X, E_i] = 0 for every frame field E_i, over the
// polynomial ansatz of x-degree <= max_degree with all eta orders; both
// parities.  Throws std::domain_error on a frame that is degenerate at body
// level on the sample grid.
KillingBasis killing_parallelization(const std::vector<SuperVectorField>& frame,
                                     unsigned max_degree);

// Super Killing fields of a constant even supersymmetric nondegenerate
// metric J on R^{n|m}: invariance of J under the coefficient gradients.
KillingBasis killing_metric(std::size_t n_even, std::size_t n_odd, const Matrix& j,
                            unsigned max_degree);

// Evaluations X(p) as columns; full rank = dim certifies the injectivity of
// evaluation on the solution space.
Matrix evaluation_matrix(const KillingBasis& basis, const std::vector<GaussianRational>& body);

// The solution space is a Lie superalgebra: brackets stay inside the span.
bool bracket_closed(const KillingBasis& basis);

bool field_in_span(const std::vector<SuperVectorField>& fields, const SuperVectorField& candidate);

} // namespace supercalc

#endif
