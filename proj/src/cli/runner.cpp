#include "cli/runner.hpp"

#include "cli/expr.hpp"
#include "cli/selftest.hpp"
#include "prolong/admissible.hpp"
#include "supercalc/endomorphism.hpp"
#include "supercalc/flow.hpp"
#include "supercalc/killing.hpp"

#include <bit>
#include <chrono>
#include <optional>
#include <sstream>

namespace spcli {

namespace {

using gsalg::GradedDim;
using gsalg::MixedData;
using prolong::ProlongationTower;
using supercalc::GrassmannPoly;
using supercalc::OddMask;
using supercalc::SuperVectorField;

ordered_json graded(const GradedDim& d) {
  return ordered_json{{"even", d.even}, {"odd", d.odd}};
}

MixedData model_mixed(const SpaceBlock& sb) {
  auto [n1, n2] = *sb.split;
  return MixedData::model({sb.even, sb.odd}, n1, n2);
}

ordered_json tower_levels(ProlongationTower& t, std::size_t kmax, const ProblemSpec& spec) {
  ordered_json levels = ordered_json::array();
  std::optional<std::vector<prolong::LevelMixedStructure>> chain;
  std::size_t last = kmax;
  for (std::size_t k = 0; k <= kmax; ++k)
    if (t.level(k).dim().total() == 0) {
      last = k;
      break;
    }
  if (spec.space && spec.space->split && t.level(0).dim().total() > 0) {
    std::size_t top = last == 0 ? 0 : last - 1;
    if (t.level(last).dim().total() > 0) top = last;
    chain = prolong::level_mixed_chain(t, model_mixed(*spec.space), top);
  }
  for (std::size_t k = 0; k <= last; ++k) {
    ordered_json lvl;
    lvl["k"] = k;
    lvl["dim"] = graded(t.level(k).dim());
    if (t.level(k).dim().total() > 0 || k == 0) lvl["h02"] = graded(t.h02_at(k));
    if (chain && k < chain->size()) {
      lvl["real_even_dim"] = (*chain)[k].w_r.dim().total();
      lvl["complex_even_dim"] = (*chain)[k].w_c.dim().total() / 2;
    }
    levels.push_back(lvl);
  }
  return levels;
}

ordered_json run_prolong(const ProblemSpec& spec) {
  ProlongationTower t(build_algebra(spec));
  ordered_json res;
  res["levels"] = tower_levels(t, spec.task.kmax, spec);
  auto ft = prolong::finite_type(t, spec.task.kmax);
  if (ft.finite) res["vanishes_at"] = ft.k;
  return res;
}

ordered_json run_finite_type(const ProblemSpec& spec) {
  ProlongationTower t(build_algebra(spec));
  auto ft = prolong::finite_type(t, spec.task.kmax);
  ordered_json res;
  res["verdict"] = ft.finite ? "finite" : "undecided";
  if (ft.finite)
    res["k"] = ft.k;
  else
    res["kmax"] = ft.kmax;
  res["levels"] = tower_levels(t, ft.finite ? ft.k : spec.task.kmax, spec);
  return res;
}

ordered_json run_admissible(const ProblemSpec& spec) {
  ProlongationTower t(build_algebra(spec));
  prolong::AdmissibilityResult r;
  try {
    r = prolong::is_admissible(t, model_mixed(*spec.space), spec.task.kmax);
  } catch (const std::invalid_argument& e) {
    throw ComputationError(e.what());
  }
  ordered_json res;
  res["verdict"] = r.str();
  if (r.verdict == prolong::AdmissibilityResult::Verdict::Inadmissible)
    res["failed_level"] = r.failed_level;
  ordered_json levels = ordered_json::array();
  for (std::size_t k = 0; k < r.levels.size(); ++k) {
    const auto& l = r.levels[k];
    ordered_json lvl;
    lvl["k"] = k;
    lvl["dim"] = graded(l.dim);
    lvl["real_even_dim"] = l.real_even_dim;
    lvl["complex_even_dim"] = l.complex_even_dim;
    lvl["mixed_check"] = l.check.valid ? "valid" : "violation: " + l.check.violation;
    levels.push_back(lvl);
  }
  res["levels"] = levels;
  res["tower_vanished"] = r.tower_vanished;
  return res;
}

ordered_json run_h02(const ProblemSpec& spec) {
  auto g = build_algebra(spec);
  ordered_json res;
  res["h02"] = graded(prolong::h02_dimension(g));
  res["algebra_dim"] = graded(g.dim());
  res["g1_dim"] = graded(prolong::first_prolongation(g).dim());
  return res;
}

ordered_json killing_report(const supercalc::KillingBasis& basis, bool with_rank) {
  ordered_json res;
  res["dim"] = graded(basis.dim());
  ordered_json fields = ordered_json::array();
  for (const auto& f : basis.even_fields) fields.push_back(f.str());
  for (const auto& f : basis.odd_fields) fields.push_back(f.str());
  res["basis"] = fields;
  res["bracket_closed"] = supercalc::bracket_closed(basis);
  if (with_rank) {
    std::vector<gsalg::GaussianRational> origin(basis.n_even, gsalg::GaussianRational(0));
    res["evaluation_rank"] = gsalg::rank(supercalc::evaluation_matrix(basis, origin));
  }
  return res;
}

ordered_json run_killing(const ProblemSpec& spec) {
  const std::size_t n = spec.space->even, m = spec.space->odd;
  try {
    if (spec.task.killing_mode == "frame") {
      std::vector<SuperVectorField> frame;
      for (const auto& src : spec.task.frame) frame.push_back(parse_vector_field(src, n, m));
      auto basis = supercalc::killing_parallelization(frame, spec.task.degree);
      return killing_report(basis, true);
    }
    gsalg::Matrix j;
    if (spec.task.metric) {
      j = parse_matrix(*spec.task.metric);
    } else {
      if (m % 2 != 0)
        throw ComputationError("standard even metric needs an even odd-dimension");
      j = liesuper::BilinearForm::standard_even({n, m}).matrix();
    }
    auto basis = supercalc::killing_metric(n, m, j, spec.task.degree);
    return killing_report(basis, false);
  } catch (const ParseError& e) {
    throw ValidationError(e.what());
  } catch (const ComputationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ComputationError(e.what());
  }
}

ordered_json gnumber_json(const supercalc::GNumber& g) {
  ordered_json terms = ordered_json::array();
  for (std::size_t mask = 0; mask < (std::size_t(1) << g.generators()); ++mask) {
    if (g[static_cast<OddMask>(mask)] == supercalc::Complex(0.0)) continue;
    ordered_json t;
    ordered_json idx = ordered_json::array();
    for (std::size_t mm = mask; mm;) {
      idx.push_back(std::countr_zero(mm) + 1);
      mm &= mm - 1;
    }
    t["eta"] = idx;
    t["re"] = g[static_cast<OddMask>(mask)].real();
    t["im"] = g[static_cast<OddMask>(mask)].imag();
    terms.push_back(t);
  }
  return terms;
}

ordered_json run_flow(const ProblemSpec& spec) {
  const std::size_t n = spec.space->even, m = spec.space->odd;
  SuperVectorField x(n, m, gsalg::Parity::Even);
  try {
    x = parse_vector_field(spec.task.field, n, m);
  } catch (const ParseError& e) {
    throw ValidationError(e.what());
  }
  supercalc::FlowOptions opts;
  opts.escape_norm = spec.task.escape_norm;
  supercalc::FlowResult r;
  try {
    r = supercalc::flow(x, spec.task.t0, spec.task.t1, spec.task.points, spec.task.steps, opts);
  } catch (const std::exception& e) {
    throw ComputationError(e.what());
  }
  ordered_json res;
  res["t0"] = r.t0;
  res["t1"] = r.t1;
  res["steps"] = r.steps;
  res["step"] = r.step;
  res["escape_norm"] = r.escape_norm;
  ordered_json pts = ordered_json::array();
  for (std::size_t k = 0; k < r.points.size(); ++k) {
    const auto& p = r.points[k];
    ordered_json pj;
    pj["initial"] = spec.task.points[k];
    pj["escaped"] = p.escaped;
    if (p.escaped) pj["escape_time"] = p.escape_time;
    double residual = supercalc::flow_equation_residual(x, p);
    pj["flow_equation_residual"] = residual;
    pj["residual_within_tol"] = residual <= spec.task.tol;
    if (!p.escaped) pj["richardson_error"] = p.richardson_error;
    ordered_json final_state = ordered_json::array();
    for (std::size_t c = 0; c < p.states.back().coords.size(); ++c) {
      ordered_json cj;
      cj["coordinate"] = c < n ? "x" + std::to_string(c + 1) : "th" + std::to_string(c - n + 1);
      cj["terms"] = gnumber_json(p.states.back().coords[c]);
      final_state.push_back(cj);
    }
    pj["final"] = final_state;
    pts.push_back(pj);
  }
  res["points"] = pts;
  return res;
}

// In the decompose task the family parameters are the trailing odd
// coordinates th(m+1)..th(m+P); internally they sit below the domain
// generators, so incoming expressions get their generators permuted.
GrassmannPoly to_internal_order(const GrassmannPoly& g, std::size_t n_params, std::size_t m) {
  GrassmannPoly out(g.n_even(), n_params + m);
  for (const auto& [mask, poly] : g.terms()) {
    std::vector<std::size_t> imgs;
    for (OddMask mm = mask; mm;) {
      std::size_t j = std::countr_zero(mm);
      imgs.push_back(j < m ? n_params + j : j - m);
      mm &= mm - 1;
    }
    int swaps = 0;
    for (std::size_t a = 0; a < imgs.size(); ++a)
      for (std::size_t b = a + 1; b < imgs.size(); ++b)
        if (imgs[a] > imgs[b]) ++swaps;
    OddMask nm = 0;
    for (std::size_t i : imgs) nm |= OddMask(1) << i;
    out.add_term(nm, swaps % 2 ? poly.scaled(gsalg::GaussianRational(-1)) : poly);
  }
  return out;
}

ordered_json run_decompose(const ProblemSpec& spec) {
  const std::size_t n = spec.space->even, m = spec.space->odd;
  const std::size_t np = spec.task.odd_params;

  std::vector<GrassmannPoly> comps(n + m, GrassmannPoly(n, np + m));
  std::vector<bool> seen(n + m, false);
  for (const auto& [key, src] : spec.task.components) {
    std::size_t c;
    if (key.size() > 1 && key[0] == 'x')
      c = std::stoul(key.substr(1)) - 1;
    else if (key.size() > 2 && key.compare(0, 2, "th") == 0)
      c = n + std::stoul(key.substr(2)) - 1;
    else
      throw ValidationError("component key '" + key + "' is not a coordinate name");
    if (c >= n + m) throw ValidationError("component key '" + key + "' is out of range");
    if (seen[c]) throw ValidationError("duplicate component for '" + key + "'");
    seen[c] = true;
    try {
      comps[c] = to_internal_order(parse_superfunction(src, n, m + np), np, m);
    } catch (const ParseError& e) {
      throw ValidationError("component '" + key + "': " + e.what());
    }
  }
  for (std::size_t c = 0; c < n + m; ++c)
    if (!seen[c])
      throw ValidationError("missing component for coordinate " +
                            (c < n ? "x" + std::to_string(c + 1)
                                   : "th" + std::to_string(c - n + 1)));

  std::optional<supercalc::FamilyDecomposition> dec;
  try {
    dec = supercalc::family_decompose(np, n, m, comps);
  } catch (const std::exception& e) {
    throw ComputationError(e.what());
  }

  ordered_json res;
  ordered_json base = ordered_json::array();
  for (std::size_t c = 0; c < n + m; ++c) {
    ordered_json b;
    b["coordinate"] = c < n ? "x" + std::to_string(c + 1) : "th" + std::to_string(c - n + 1);
    b["value"] = dec->base.component(c).str();
    base.push_back(b);
  }
  res["base"] = base;
  ordered_json fields = ordered_json::array();
  for (const auto& [mask, f] : dec->fields) {
    ordered_json fj;
    ordered_json idx = ordered_json::array();
    for (OddMask mm = mask; mm;) {
      idx.push_back(m + std::countr_zero(mm) + 1); // user-facing parameter names
      mm &= mm - 1;
    }
    fj["parameters"] = idx;
    fj["parity"] = f.parity() == gsalg::Parity::Odd ? "odd" : "even";
    fj["field"] = f.str();
    fields.push_back(fj);
  }
  res["fields"] = fields;
  res["roundtrip_exact"] = true; // family_decompose verifies this internally
  return res;
}

} // namespace

ordered_json run_problem(const ProblemSpec& spec, bool with_timing) {
  auto start = std::chrono::steady_clock::now();

  ordered_json results;
  const std::string& name = spec.task.name;
  if (name == "prolong")
    results = run_prolong(spec);
  else if (name == "finite-type")
    results = run_finite_type(spec);
  else if (name == "admissible")
    results = run_admissible(spec);
  else if (name == "h02")
    results = run_h02(spec);
  else if (name == "killing")
    results = run_killing(spec);
  else if (name == "flow")
    results = run_flow(spec);
  else if (name == "decompose")
    results = run_decompose(spec);
  else if (name == "check")
    results = run_selftest(spec.task.seed);
  else
    throw ValidationError("unknown task '" + name + "'");

  ordered_json report;
  report["tool"] = kToolName;
  report["tool_version"] = kToolVersion;
  report["seed"] = spec.task.seed;
  report["task"] = spec.to_json();
  report["results"] = results;
  if (with_timing) {
    auto end = std::chrono::steady_clock::now();
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  }
  return report;
}

std::string render_table(const ordered_json& report) {
  std::ostringstream out;
  const auto& task = report.at("task");
  const auto& res = report.at("results");
  std::string name = task.at("task").at("name").get<std::string>();
  out << "task: " << name << "\n";

  auto print_levels = [&](const ordered_json& levels) {
    out << "  k   dim(even|odd)";
    if (!levels.empty() && levels[0].contains("real_even_dim")) out << "   real-even   cplx-even";
    if (!levels.empty() && levels[0].contains("h02")) out << "   h02(even|odd)";
    out << "\n";
    for (const auto& l : levels) {
      out << "  " << l.at("k").get<std::size_t>() << "   " << l.at("dim").at("even").get<std::size_t>()
          << "|" << l.at("dim").at("odd").get<std::size_t>();
      if (l.contains("real_even_dim"))
        out << "   " << l.at("real_even_dim").get<std::size_t>() << "   "
            << l.at("complex_even_dim").get<std::size_t>();
      if (l.contains("h02"))
        out << "   " << l.at("h02").at("even").get<std::size_t>() << "|"
            << l.at("h02").at("odd").get<std::size_t>();
      if (l.contains("mixed_check")) out << "   " << l.at("mixed_check").get<std::string>();
      out << "\n";
    }
  };

  if (name == "prolong") {
    print_levels(res.at("levels"));
    if (res.contains("vanishes_at"))
      out << "tower vanishes at k = " << res.at("vanishes_at").get<std::size_t>() << "\n";
  } else if (name == "finite-type") {
    out << "verdict: " << res.at("verdict").get<std::string>();
    if (res.contains("k")) out << "(" << res.at("k").get<std::size_t>() << ")";
    if (res.contains("kmax")) out << " up to kmax = " << res.at("kmax").get<std::size_t>();
    out << "\n";
    print_levels(res.at("levels"));
  } else if (name == "admissible") {
    out << "verdict: " << res.at("verdict").get<std::string>() << "\n";
    print_levels(res.at("levels"));
  } else if (name == "h02") {
    out << "dim g = " << res.at("algebra_dim").at("even").get<std::size_t>() << "|"
        << res.at("algebra_dim").at("odd").get<std::size_t>() << "\n";
    out << "dim g^(1) = " << res.at("g1_dim").at("even").get<std::size_t>() << "|"
        << res.at("g1_dim").at("odd").get<std::size_t>() << "\n";
    out << "dim H^{0,2} = " << res.at("h02").at("even").get<std::size_t>() << "|"
        << res.at("h02").at("odd").get<std::size_t>() << "\n";
  } else if (name == "killing") {
    out << "dim = " << res.at("dim").at("even").get<std::size_t>() << "|"
        << res.at("dim").at("odd").get<std::size_t>() << "\n";
    out << "bracket closed: " << (res.at("bracket_closed").get<bool>() ? "yes" : "no") << "\n";
    if (res.contains("evaluation_rank"))
      out << "evaluation rank at origin: " << res.at("evaluation_rank").get<std::size_t>() << "\n";
    for (const auto& f : res.at("basis")) out << "  " << f.get<std::string>() << "\n";
  } else if (name == "flow") {
    for (const auto& p : res.at("points")) {
      out << "  point [";
      bool first = true;
      for (const auto& x : p.at("initial")) {
        if (!first) out << ", ";
        out << x.get<double>();
        first = false;
      }
      out << "]: ";
      if (p.at("escaped").get<bool>())
        out << "escaped at t = " << p.at("escape_time").get<double>();
      else
        out << "complete on the horizon";
      out << ", residual = " << p.at("flow_equation_residual").get<double>() << "\n";
    }
  } else if (name == "decompose") {
    out << "base map:\n";
    for (const auto& b : res.at("base"))
      out << "  " << b.at("coordinate").get<std::string>() << " -> "
          << b.at("value").get<std::string>() << "\n";
    out << "odd-parameter fields:\n";
    for (const auto& f : res.at("fields")) {
      out << "  I = {";
      bool first = true;
      for (const auto& i : f.at("parameters")) {
        if (!first) out << ",";
        out << "th" << i.get<std::size_t>();
        first = false;
      }
      out << "}: " << f.at("field").get<std::string>() << "\n";
    }
  } else if (name == "check") {
    for (const auto& c : res.at("checks"))
      out << "  [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] "
          << c.at("name").get<std::string>() << "\n";
    out << res.at("passed").get<std::size_t>() << " passed, "
        << res.at("failed").get<std::size_t>() << " failed\n";
  }
  return out.str();
}

} // namespace spcli
