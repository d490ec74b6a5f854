#include "cli/selftest.hpp"

#include "cli/expr.hpp"
#include "liesuper/forms.hpp"
#include "prolong/admissible.hpp"
#include "supercalc/flow.hpp"

#include <cmath>
#include <random>

namespace spcli {

namespace {

using gsalg::GaussianRational;
using gsalg::GradedDim;
using gsalg::MixedData;
using gsalg::Parity;
using liesuper::BilinearForm;
using liesuper::SuperAlgebraBasis;

bool scalar_checks() {
  GaussianRational i = GaussianRational::i();
  if (i * i != GaussianRational(-1)) return false;
  GaussianRational half(1, 2);
  if (half + half != GaussianRational(1)) return false;
  return GaussianRational::parse((half + i).str()) == half + i;
}

bool mixed_checks() {
  for (auto [n1, n2] :
       {std::pair<std::size_t, std::size_t>{1, 0}, {0, 1}, {2, 1}}) {
    if (!gsalg::check_mixed(MixedData::model({n1 + n2, 1}, n1, n2)).valid) return false;
  }
  auto thin = MixedData::general({2, 0}, {{GaussianRational(1), GaussianRational(0)}}, {});
  return !gsalg::check_mixed(thin).valid;
}

bool bracket_checks(unsigned seed) {
  std::mt19937_64 rng(seed);
  auto g = liesuper::osp_algebra(BilinearForm::standard_even({2, 2}));
  if (g.dim() != GradedDim{4, 4}) return false;
  if (!liesuper::is_subalgebra(g)) return false;
  // random Jacobi probe
  std::uniform_int_distribution<int> d(-2, 2);
  const auto& elems = g.elements();
  for (int t = 0; t < 20; ++t) {
    const auto& a = elems[rng() % elems.size()];
    const auto& b = elems[rng() % elems.size()];
    const auto& c = elems[rng() % elems.size()];
    auto lhs = liesuper::bracket(a, liesuper::bracket(b, c));
    auto rhs1 = liesuper::bracket(liesuper::bracket(a, b), c);
    auto rhs2 = liesuper::bracket(b, liesuper::bracket(a, c));
    if (gsalg::koszul(a.parity(), b.parity()) < 0) rhs2 = liesuper::gl_scale(GaussianRational(-1), rhs2);
    if (!(lhs.matrix() == rhs1.matrix() + rhs2.matrix())) return false;
  }
  (void)d;
  return true;
}

bool vanishing_checks() {
  auto osp = liesuper::osp_algebra(BilinearForm::standard_even({2, 2}));
  if (prolong::first_prolongation(osp).dim().total() != 0) return false;
  auto p = liesuper::p_algebra(BilinearForm::standard_odd({2, 2}));
  return prolong::first_prolongation(p).dim().total() == 0;
}

bool parser_checks() {
  for (const char* src : {"x1 + i*th1*th2", "th1*th1", "(x1^2)*D[x1] + th1*D[th1]",
                          "1/2*x1^3 - 3*th2", "x1*x2 - x2*x1"}) {
    auto v = parse_expression(src, 2, 2);
    if (v.is_field) {
      auto f = parse_vector_field(src, 2, 2);
      if (!(parse_vector_field(f.str(), 2, 2) == f)) return false;
    } else {
      if (!(parse_superfunction(v.fn.str(), 2, 2) == v.fn)) return false;
    }
  }
  if (!parse_superfunction("th1*th1", 2, 2).is_zero()) return false;
  try {
    parse_expression("x1 + ", 2, 2);
    return false;
  } catch (const ParseError&) {
  }
  return true;
}

bool flow_checks() {
  auto x = parse_vector_field("D[x1]", 1, 1);
  auto r = supercalc::flow(x, 0.0, 0.5, {{1.0}}, 50);
  const auto& p = r.points[0];
  if (p.escaped) return false;
  double final_x = p.states.back().coords[0].body().real();
  return std::abs(final_x - 1.5) < 1e-10 &&
         supercalc::flow_equation_residual(x, p) < 1e-8;
}

} // namespace

nlohmann::ordered_json run_selftest(unsigned seed) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  std::size_t passed = 0, failed = 0;

  auto record = [&](const char* name, bool ok) {
    nlohmann::ordered_json c;
    c["name"] = name;
    c["pass"] = ok;
    checks.push_back(c);
    (ok ? passed : failed)++;
  };

  record("exact scalar arithmetic", scalar_checks());
  record("mixed model spaces", mixed_checks());
  record("osp(2|2) dims, closure, Jacobi", bracket_checks(seed));
  record("osp/p first prolongation vanishes", vanishing_checks());
  record("expression parser round-trip", parser_checks());
  record("translation flow sanity", flow_checks());

  nlohmann::ordered_json res;
  res["checks"] = checks;
  res["passed"] = passed;
  res["failed"] = failed;
  return res;
}

} // namespace spcli
