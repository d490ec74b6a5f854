#ifndef SUPERCALC_FLOW_HPP
#define SUPERCALC_FLOW_HPP

#include "supercalc/gnumber.hpp"
#include "supercalc/vectorfield.hpp"

namespace supercalc {

// Numeric superpoint: one Grassmann number per coordinate, all over the
// domain's odd generators.
struct GrassmannState {
  std::size_t n_even = 0, n_odd = 0;
  std::vector<GNumber> coords;

  double norm() const;
  bool finite() const;
};

// Theta_0 = id: body coordinates at the given point, eta_j |-> eta_j.
GrassmannState identity_state(std::size_t n_even, std::size_t n_odd,
                              const std::vector<double>& body);

struct FlowOptions {
  double escape_norm = 1e6; // blow-up threshold on any coordinate
};

struct FlowPoint {
  std::vector<double> times;
  std::vector<GrassmannState> states; // one per retained grid time
  bool escaped = false;
  double escape_time = 0.0;       // first grid time past the threshold
  double richardson_error = 0.0;  // step-halving discrepancy at the endpoint
};

struct FlowResult {
  double t0 = 0.0, t1 = 0.0;
  std::size_t steps = 0;
  double step = 0.0;
  double escape_norm = 0.0;
  std::vector<FlowPoint> points;
};

// RK4 with fixed step from an arbitrary initial superpoint.  Throws
// std::invalid_argument unless X is an even real vector field with the same
// coordinate layout.
FlowPoint integrate(const SuperVectorField& x, double t0, double t1, GrassmannState init,
                    std::size_t steps, const FlowOptions& opts = {});

// Flow of the identity over a list of initial body points.
FlowResult flow(const SuperVectorField& x, double t0, double t1,
                const std::vector<std::vector<double>>& initial_bodies, std::size_t steps,
                const FlowOptions& opts = {});

// Scaled Hermite-midpoint defect of the trajectory against the flow ODE;
// max over grid intervals and coordinates.
double flow_equation_residual(const SuperVectorField& x, const FlowPoint& p);

// Convenience: the state of the flow of x at time t started at `body`.
GrassmannState flow_to(const SuperVectorField& x, double t, const std::vector<double>& body,
                       std::size_t steps);

} // namespace supercalc

#endif
