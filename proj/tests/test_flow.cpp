#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercalc/flow.hpp"
#include "supercalc/killing.hpp"
#include "supercalc/lie_check.hpp"

#include <cmath>

using namespace supercalc;
using gsalg::GaussianRational;
using gsalg::Parity;

namespace {

GaussianRational G(long n) { return GaussianRational(n); }

GrassmannPoly Xc(std::size_t n, std::size_t m, std::size_t i) {
  return GrassmannPoly::coordinate(n, m, i);
}
GrassmannPoly Eta(std::size_t n, std::size_t m, std::size_t j) {
  return GrassmannPoly::eta(n, m, j);
}
GrassmannPoly C1(std::size_t n, std::size_t m) {
  return GrassmannPoly::constant(n, m, G(1));
}

SuperVectorField translation_field() { // d/dx on R^{1|1}
  return SuperVectorField::d_coord(1, 1, 0);
}

SuperVectorField linear_field() { // x d/dx + eta d/deta on R^{1|1}
  SuperVectorField x(1, 1, Parity::Even);
  x.set_coeff(0, Xc(1, 1, 0));
  x.set_coeff(1, Eta(1, 1, 0));
  return x;
}

SuperVectorField blowup_field() { // x^2 d/dx on R^{1|0}
  SuperVectorField x(1, 0, Parity::Even);
  x.set_coeff(0, Xc(1, 0, 0) * Xc(1, 0, 0));
  return x;
}

} // namespace

TEST_CASE("flow rejects anything but even real fields") {
  SuperVectorField odd(1, 1, Parity::Odd);
  odd.set_coeff(1, C1(1, 1));
  CHECK_THROWS_AS(flow(odd, 0.0, 1.0, {{0.0}}, 10), std::invalid_argument);

  SuperVectorField imag(1, 1, Parity::Even);
  imag.set_coeff(0, Xc(1, 1, 0).scaled(GaussianRational(gsalg::Rational(0), gsalg::Rational(1))));
  CHECK_THROWS_AS(flow(imag, 0.0, 1.0, {{0.0}}, 10), std::invalid_argument);
}

TEST_CASE("translation flow: body shifts, higher coefficients constant, Theta_0 = id") {
  auto X = translation_field();
  const std::vector<double> starts = {0.25, -2.0};
  auto r = flow(X, 0.0, 1.0, {{starts[0]}, {starts[1]}}, 100);
  for (std::size_t k = 0; k < r.points.size(); ++k) {
    const auto& p = r.points[k];
    CHECK_FALSE(p.escaped);
    // Theta_0 = id exactly
    CHECK(p.states.front().coords[0].body() == Complex(starts[k], 0.0));
    CHECK(p.states.front().coords[1][1] == Complex(1.0, 0.0));
    // body trajectory x0 + t; eta coefficient stays exactly 1
    for (std::size_t i = 0; i < p.times.size(); ++i) {
      CHECK(std::abs(p.states[i].coords[0].body().real() - (starts[k] + p.times[i])) < 1e-12);
      CHECK(std::abs(p.states[i].coords[1][1] - Complex(1.0, 0.0)) < 1e-15);
    }
  }
  CHECK(flow_equation_residual(X, r.points[0]) < 1e-6);
}

TEST_CASE("linear flow: x0 e^t and eta-coefficient e^t within 1e-8") {
  auto X = linear_field();
  auto r = flow(X, 0.0, 1.0, {{0.5}}, 1000);
  const auto& p = r.points[0];
  REQUIRE_FALSE(p.escaped);
  for (std::size_t i = 0; i < p.times.size(); i += 100) {
    double et = std::exp(p.times[i]);
    CHECK(std::abs(p.states[i].coords[0].body().real() - 0.5 * et) < 1e-8);
    CHECK(std::abs(p.states[i].coords[1][1] - Complex(et, 0.0)) < 1e-8);
  }
  CHECK(flow_equation_residual(X, p) < 1e-6);
  CHECK(p.richardson_error < 1e-9); // step-halving agreement

  // flow of a real field stays real
  for (const auto& s : p.states) {
    CHECK(std::abs(s.coords[0].body().imag()) < 1e-9);
    CHECK(std::abs(s.coords[1][1].imag()) < 1e-9);
  }
}

TEST_CASE("blow-up flow: escape at t = 1 within 1e-3") {
  auto X = blowup_field();
  FlowOptions opts;
  opts.escape_norm = 1e5;
  auto r = flow(X, 0.0, 1.2, {{1.0}}, 12000, opts);
  const auto& p = r.points[0];
  REQUIRE(p.escaped);
  CHECK(std::abs(p.escape_time - 1.0) <= 1e-3);

  // the flow equation holds on the sane part of the trajectory
  FlowPoint clipped;
  clipped.times.assign(p.times.begin(), p.times.begin() + 9500);
  clipped.states.assign(p.states.begin(), p.states.begin() + 9500);
  CHECK(flow_equation_residual(X, clipped) < 1e-6);
}

TEST_CASE("group law: Theta_{t+s} = Theta_t . Theta_s within 1e-6") {
  auto X = linear_field();
  const double s = 0.2, t = 0.3;
  auto first = integrate(X, 0.0, s, identity_state(1, 1, {0.7}), 200);
  auto second = integrate(X, 0.0, t, first.states.back(), 300);
  auto direct = integrate(X, 0.0, s + t, identity_state(1, 1, {0.7}), 500);
  const auto& a = second.states.back().coords;
  const auto& b = direct.states.back().coords;
  for (std::size_t c = 0; c < a.size(); ++c) CHECK((a[c] - b[c]).norm() < 1e-6);
}

TEST_CASE("commuting fields: pullback commutation residual") {
  // X = d/dx, Y = d/dx
  auto X = translation_field();
  CHECK(pullback_commute_residual(X, X, 0.4, {{0.1}, {1.0}}, 64) < 1e-5);

  // X = x d/dx + eta d/deta commutes with x d/dx
  auto Xl = linear_field();
  SuperVectorField Y(1, 1, Parity::Even);
  Y.set_coeff(0, Xc(1, 1, 0));
  CHECK(vf_bracket(Xl, Y).is_zero());
  CHECK(pullback_commute_residual(Xl, Y, 0.3, {{0.4}, {1.2}}, 64) < 1e-5);
}

TEST_CASE("Lie derivative via the flow matches the bracket") {
  // X = d/dx, Y = x d/dx: L_X Y = d/dx
  auto X = translation_field();
  SuperVectorField Y(1, 1, Parity::Even);
  Y.set_coeff(0, Xc(1, 1, 0));
  CHECK(lie_derivative_residual(X, Y, 1e-3, {{0.3}, {-0.5}}, 16) < 1e-5);

  // X = x d/dx (+ eta d/deta), Y = eta1 d/deta2 on R^{1|2}
  SuperVectorField X2(1, 2, Parity::Even);
  X2.set_coeff(0, Xc(1, 2, 0));
  SuperVectorField Y2(1, 2, Parity::Even);
  Y2.set_coeff(2, Eta(1, 2, 0)); // eta1 d/deta2
  CHECK(lie_derivative_residual(X2, Y2, 1e-3, {{0.8}}, 16) < 1e-5);

  // an odd-coefficient example: Y = eta1 d/dx
  SuperVectorField Y3(1, 2, Parity::Odd);
  Y3.set_coeff(0, Eta(1, 2, 0));
  CHECK(lie_derivative_residual(X2, Y3, 1e-3, {{0.6}}, 16) < 1e-5);
}

TEST_CASE("killing_parallelization: standard frame gives constant fields, dim n|m") {
  std::vector<SuperVectorField> frame;
  for (std::size_t c = 0; c < 4; ++c) frame.push_back(SuperVectorField::d_coord(2, 2, c));
  auto basis = killing_parallelization(frame, 2);
  CHECK(basis.dim() == gsalg::GradedDim{2, 2});
  CHECK(bracket_closed(basis));
  auto ev = evaluation_matrix(basis, {G(0), G(0)});
  CHECK(gsalg::rank(ev) == 4);
}

TEST_CASE("killing_parallelization: perturbed frame, evaluation injectivity") {
  // frame {d/dx, (1+x^2) d/deta} on R^{1|1}
  std::vector<SuperVectorField> frame;
  frame.push_back(SuperVectorField::d_coord(1, 1, 0));
  SuperVectorField e2(1, 1, Parity::Odd);
  e2.set_coeff(1, C1(1, 1) + Xc(1, 1, 0) * Xc(1, 1, 0));
  frame.push_back(e2);

  auto basis = killing_parallelization(frame, 3);
  CHECK(basis.dim().total() <= 2); // evaluation injectivity bound
  CHECK(bracket_closed(basis));
  auto ev = evaluation_matrix(basis, {G(0)});
  CHECK(gsalg::rank(ev) == basis.dim().total());

  // degenerate frame rejected
  std::vector<SuperVectorField> dframe;
  dframe.push_back(SuperVectorField::d_coord(1, 1, 0));
  SuperVectorField zero_odd(1, 1, Parity::Odd);
  zero_odd.set_coeff(1, Xc(1, 1, 0)); // vanishes at x = 0
  dframe.push_back(zero_odd);
  CHECK_THROWS_AS(killing_parallelization(dframe, 2), std::domain_error);
}

TEST_CASE("killing_metric: flat isometry dimensions") {
  // R^{2|0}, J = id: rotation + 2 translations
  auto j2 = gsalg::Matrix::identity(2);
  auto b2 = killing_metric(2, 0, j2, 2);
  CHECK(b2.dim() == gsalg::GradedDim{3, 0});
  CHECK(bracket_closed(b2));

  // R^{0|2} with the standard symplectic odd-odd block: sp(2) + 2 odd translations
  gsalg::Matrix j02(2, 2);
  j02.at(0, 1) = G(1);
  j02.at(1, 0) = G(-1);
  auto b02 = killing_metric(0, 2, j02, 2);
  CHECK(b02.dim() == gsalg::GradedDim{3, 2});
  CHECK(bracket_closed(b02));

  gsalg::Matrix degenerate(2, 2);
  CHECK_THROWS_AS(killing_metric(2, 0, degenerate, 2), std::domain_error);
}
