#include "supercalc/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace supercalc {

namespace {

std::vector<GNumber> rhs(const SuperVectorField& x, const std::vector<GNumber>& coords) {
  std::vector<GNumber> out;
  out.reserve(coords.size());
  for (std::size_t c = 0; c < coords.size(); ++c) out.push_back(eval_at(x.coeff(c), coords));
  return out;
}

std::vector<GNumber> axpy(const std::vector<GNumber>& base, double a,
                          const std::vector<GNumber>& dir) {
  std::vector<GNumber> out = base;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += dir[k].scaled(a);
  return out;
}

double coords_norm(const std::vector<GNumber>& coords) {
  double m = 0.0;
  for (const auto& g : coords) m = std::max(m, g.norm());
  return m;
}

bool coords_finite(const std::vector<GNumber>& coords) {
  for (const auto& g : coords)
    if (!g.finite()) return false;
  return true;
}

} // namespace

double GrassmannState::norm() const { return coords_norm(coords); }
bool GrassmannState::finite() const { return coords_finite(coords); }

GrassmannState identity_state(std::size_t n_even, std::size_t n_odd,
                              const std::vector<double>& body) {
  if (body.size() != n_even)
    throw std::invalid_argument("identity_state: body point needs one entry per even coordinate");
  GrassmannState s;
  s.n_even = n_even;
  s.n_odd = n_odd;
  for (std::size_t i = 0; i < n_even; ++i)
    s.coords.push_back(GNumber::scalar(n_odd, Complex(body[i], 0.0)));
  for (std::size_t j = 0; j < n_odd; ++j) s.coords.push_back(GNumber::generator(n_odd, j));
  return s;
}

FlowPoint integrate(const SuperVectorField& x, double t0, double t1, GrassmannState init,
                    std::size_t steps, const FlowOptions& opts) {
  if (!is_even_real_vf(x))
    throw std::invalid_argument("flow: only even real vector fields have flows");
  if (init.n_even != x.n_even() || init.n_odd != x.n_odd())
    throw std::invalid_argument("flow: initial state layout mismatch");
  if (steps == 0) throw std::invalid_argument("flow: steps must be positive");

  const double h = (t1 - t0) / static_cast<double>(steps);
  FlowPoint p;
  p.times.push_back(t0);
  p.states.push_back(init);

  std::vector<GNumber> s = init.coords;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t_next = t0 + h * static_cast<double>(i + 1);
    std::vector<GNumber> k1 = rhs(x, s);
    std::vector<GNumber> k2 = rhs(x, axpy(s, h / 2.0, k1));
    std::vector<GNumber> k3 = rhs(x, axpy(s, h / 2.0, k2));
    std::vector<GNumber> k4 = rhs(x, axpy(s, h, k3));
    std::vector<GNumber> next = s;
    for (std::size_t c = 0; c < next.size(); ++c) {
      next[c] += k1[c].scaled(h / 6.0);
      next[c] += k2[c].scaled(h / 3.0);
      next[c] += k3[c].scaled(h / 3.0);
      next[c] += k4[c].scaled(h / 6.0);
    }
    if (!coords_finite(next) || coords_norm(next) > opts.escape_norm) {
      p.escaped = true;
      p.escape_time = t_next;
      return p;
    }
    s = std::move(next);
    p.times.push_back(t_next);
    GrassmannState st;
    st.n_even = init.n_even;
    st.n_odd = init.n_odd;
    st.coords = s;
    p.states.push_back(std::move(st));
  }
  return p;
}

FlowResult flow(const SuperVectorField& x, double t0, double t1,
                const std::vector<std::vector<double>>& initial_bodies, std::size_t steps,
                const FlowOptions& opts) {
  FlowResult r;
  r.t0 = t0;
  r.t1 = t1;
  r.steps = steps;
  r.step = (t1 - t0) / static_cast<double>(steps);
  r.escape_norm = opts.escape_norm;
  for (const auto& body : initial_bodies) {
    FlowPoint p = integrate(x, t0, t1, identity_state(x.n_even(), x.n_odd(), body), steps, opts);
    if (!p.escaped) {
      // Richardson check: rerun at half the step and compare the endpoint
      FlowPoint fine =
          integrate(x, t0, t1, identity_state(x.n_even(), x.n_odd(), body), 2 * steps, opts);
      if (!fine.escaped) {
        double err = 0.0;
        for (std::size_t c = 0; c < p.states.back().coords.size(); ++c)
          err = std::max(err,
                         (p.states.back().coords[c] - fine.states.back().coords[c]).norm());
        p.richardson_error = err;
      }
    }
    r.points.push_back(std::move(p));
  }
  return r;
}

double flow_equation_residual(const SuperVectorField& x, const FlowPoint& p) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < p.states.size(); ++i) {
    const double h = p.times[i + 1] - p.times[i];
    const auto& s0 = p.states[i].coords;
    const auto& s1 = p.states[i + 1].coords;
    std::vector<GNumber> f0 = rhs(x, s0);
    std::vector<GNumber> f1 = rhs(x, s1);
    // cubic Hermite interpolant probed at the interval midpoint
    std::vector<GNumber> mid(s0.size(), GNumber(p.states[i].n_odd));
    std::vector<GNumber> dmid(s0.size(), GNumber(p.states[i].n_odd));
    for (std::size_t c = 0; c < s0.size(); ++c) {
      mid[c] = (s0[c] + s1[c]).scaled(0.5) + (f0[c] - f1[c]).scaled(h / 8.0);
      dmid[c] = (s1[c] - s0[c]).scaled(1.5 / h) - (f0[c] + f1[c]).scaled(0.25);
    }
    std::vector<GNumber> fmid = rhs(x, mid);
    double scale = 1.0;
    for (const auto& g : fmid) scale = std::max(scale, g.norm());
    for (std::size_t c = 0; c < s0.size(); ++c)
      worst = std::max(worst, (dmid[c] - fmid[c]).norm() / scale);
  }
  return worst;
}

GrassmannState flow_to(const SuperVectorField& x, double t, const std::vector<double>& body,
                       std::size_t steps) {
  FlowPoint p = integrate(x, 0.0, t, identity_state(x.n_even(), x.n_odd(), body), steps);
  if (p.escaped) throw std::runtime_error("flow_to: trajectory escaped the domain");
  return p.states.back();
}

} // namespace supercalc
