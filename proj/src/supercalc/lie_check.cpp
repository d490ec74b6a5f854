#include "supercalc/lie_check.hpp"

#include <bit>
#include <stdexcept>

namespace supercalc {

namespace {

std::vector<double> shifted(const std::vector<double>& p, std::size_t i, double d) {
  std::vector<double> q = p;
  q[i] += d;
  return q;
}

} // namespace

GNumber apply_field_numeric(const SuperVectorField& y, const NumericSuperFn& h,
                            const std::vector<double>& p, double fd_step) {
  const std::size_t n = y.n_even(), m = y.n_odd();
  GrassmannState id = identity_state(n, m, p);
  GNumber h0 = h(p);
  GNumber acc(m);
  for (std::size_t i = 0; i < n; ++i) {
    if (y.coeff(i).is_zero()) continue;
    GNumber a = eval_at(y.coeff(i), id.coords);
    GNumber dh = (h(shifted(p, i, fd_step)) - h(shifted(p, i, -fd_step))).scaled(1.0 / (2.0 * fd_step));
    acc += a * dh;
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (y.coeff(n + j).is_zero()) continue;
    GNumber b = eval_at(y.coeff(n + j), id.coords);
    acc += b * h0.partial_odd(j);
  }
  return acc;
}

GNumber compose_numeric(const NumericSuperFn& h, const GrassmannState& s, double fd_step) {
  const std::size_t n = s.n_even, m = s.n_odd;
  const unsigned order = static_cast<unsigned>(m / 2);
  if (order > 2)
    throw std::invalid_argument("compose_numeric: more than 5 odd generators not supported");

  std::vector<double> body(n);
  std::vector<GNumber> delta; // nilpotent (plus imaginary-body) displacements
  for (std::size_t i = 0; i < n; ++i) {
    body[i] = s.coords[i].body().real();
    GNumber d = s.coords[i];
    d[0] = s.coords[i][0] - Complex(body[i], 0.0);
    delta.push_back(d);
  }

  // Taylor coefficients of h at the body point
  GNumber value = h(body);
  GNumber acc = value;
  if (order >= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      GNumber di = (h(shifted(body, i, fd_step)) - h(shifted(body, i, -fd_step)))
                       .scaled(1.0 / (2.0 * fd_step));
      acc += delta[i] * di;
    }
  }
  if (order >= 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        GNumber dij;
        if (i == j) {
          dij = (h(shifted(body, i, fd_step)) - value.scaled(2.0) + h(shifted(body, i, -fd_step)))
                    .scaled(1.0 / (fd_step * fd_step));
        } else {
          auto pp = shifted(shifted(body, i, fd_step), j, fd_step);
          auto pm = shifted(shifted(body, i, fd_step), j, -fd_step);
          auto mp = shifted(shifted(body, i, -fd_step), j, fd_step);
          auto mm = shifted(shifted(body, i, -fd_step), j, -fd_step);
          dij = (h(pp) - h(pm) - h(mp) + h(mm)).scaled(1.0 / (4.0 * fd_step * fd_step));
        }
        double factor = (i == j) ? 0.5 : 1.0;
        acc += (delta[i] * delta[j] * dij).scaled(factor);
      }
  }

  // substitute the odd coordinate values: the expansion computed so far is
  // over the domain's eta generators; rebuild it on the state's odd values
  GNumber out(m);
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    // coefficient of eta^mask in acc
    Complex c = acc[static_cast<OddMask>(mask)];
    if (c == 0.0) continue;
    GNumber term = GNumber::scalar(m, c);
    for (std::size_t mm_ = mask; mm_;) {
      int j = std::countr_zero(mm_);
      term = term * s.coords[n + j];
      mm_ &= mm_ - 1;
    }
    out += term;
  }
  return out;
}

double pullback_commute_residual(const SuperVectorField& x, const SuperVectorField& y, double t,
                                 const std::vector<std::vector<double>>& sample_bodies,
                                 std::size_t steps) {
  const std::size_t n = x.n_even(), m = x.n_odd();
  double worst = 0.0;
  for (const auto& p : sample_bodies) {
    GrassmannState at_t = flow_to(x, t, p, steps);
    for (std::size_t c = 0; c < n + m; ++c) {
      // Theta_t^#(Y q_c) evaluated at p
      GNumber lhs = eval_at(y.coeff(c), at_t.coords);
      // Y(Theta_t^# q_c) at p
      NumericSuperFn h = [&, c](const std::vector<double>& q) {
        return flow_to(x, t, q, steps).coords[c];
      };
      GNumber rhs = apply_field_numeric(y, h, p);
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

double lie_derivative_residual(const SuperVectorField& x, const SuperVectorField& y, double t_step,
                               const std::vector<std::vector<double>>& sample_bodies,
                               std::size_t steps) {
  const std::size_t n = x.n_even(), m = x.n_odd();
  SuperVectorField br = vf_bracket(x, y);
  double worst = 0.0;
  for (const auto& p : sample_bodies) {
    GrassmannState id = identity_state(n, m, p);
    for (std::size_t c = 0; c < n + m; ++c) {
      auto sandwich = [&](double tau) {
        NumericSuperFn inner = [&, c](const std::vector<double>& q) {
          return flow_to(x, -tau, q, steps).coords[c];
        };
        NumericSuperFn y_inner = [&](const std::vector<double>& q) {
          return apply_field_numeric(y, inner, q);
        };
        return compose_numeric(y_inner, flow_to(x, tau, p, steps));
      };
      GNumber fd = (sandwich(t_step) - sandwich(-t_step)).scaled(1.0 / (2.0 * t_step));
      GNumber exact = eval_at(br.coeff(c), id.coords);
      worst = std::max(worst, (fd - exact).norm());
    }
  }
  return worst;
}

} // namespace supercalc
