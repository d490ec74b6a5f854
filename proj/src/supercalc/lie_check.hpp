#ifndef SUPERCALC_LIE_CHECK_HPP
#define SUPERCALC_LIE_CHECK_HPP

#include "supercalc/flow.hpp"

#include <functional>

namespace supercalc {

// Superfunction known only through evaluation at body points (e.g. a flow
// pullback): body point -> eta expansion.
using NumericSuperFn = std::function<GNumber(const std::vector<double>&)>;

// Y(h) at p: finite differences in x, algebraic left derivatives in eta.
GNumber apply_field_numeric(const SuperVectorField& y, const NumericSuperFn& h,
                            const std::vector<double>& p, double fd_step = 1e-5);

// h evaluated at a numeric superpoint: Taylor expansion in the nilpotent
// even displacements (supported up to second order, enough for n_odd <= 5).
GNumber compose_numeric(const NumericSuperFn& h, const GrassmannState& s, double fd_step = 1e-3);

// || Theta_t^#(Y phi) - Y(Theta_t^# phi) || for commuting X, Y; max over
// coordinate functions and sample points.
double pullback_commute_residual(const SuperVectorField& x, const SuperVectorField& y, double t,
                                 const std::vector<std::vector<double>>& sample_bodies,
                                 std::size_t steps);

// || FD d/dt (Theta_t)^# Y (Theta_{-t})^# - [X, Y] || at the sample points,
// central difference with the given t_step.
double lie_derivative_residual(const SuperVectorField& x, const SuperVectorField& y, double t_step,
                               const std::vector<std::vector<double>>& sample_bodies,
                               std::size_t steps);

} // namespace supercalc

#endif
