#include "cli/problem.hpp"

#include "liesuper/clifford.hpp"

#include <set>

namespace spcli {

namespace {

using gsalg::GaussianRational;
using gsalg::GradedDim;
using gsalg::Matrix;
using gsalg::Parity;
using liesuper::BilinearForm;
using liesuper::GlElement;
using liesuper::SuperAlgebraBasis;

void reject_unknown(const ordered_json& j, const std::string& where,
                    const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      throw ValidationError("unknown field '" + where + key + "'");
}

template <typename T>
T get_field(const ordered_json& j, const std::string& where, const std::string& key, T fallback,
            bool required = false) {
  if (!j.contains(key)) {
    if (required) throw ValidationError("missing field '" + where + key + "'");
    return fallback;
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("field '" + where + key + "' has the wrong type");
  }
}

} // namespace

gsalg::Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ValidationError("matrix rows have unequal lengths");
    for (std::size_t k = 0; k < c; ++k) {
      try {
        m.at(i, k) = GaussianRational::parse(rows[i][k]);
      } catch (const std::exception& e) {
        throw ValidationError(std::string("bad matrix entry: ") + e.what());
      }
    }
  }
  return m;
}

ProblemSpec parse_problem(const ordered_json& j, const std::string& subcommand) {
  if (!j.is_object()) throw ValidationError("problem spec must be a JSON object");
  reject_unknown(j, "", {"version", "space", "algebra", "task"});

  ProblemSpec spec;
  spec.version = get_field<int>(j, "", "version", 1, true);
  if (spec.version != 1)
    throw ValidationError("version mismatch: this tool reads version 1, got " +
                          std::to_string(spec.version));

  if (j.contains("space")) {
    const auto& s = j.at("space");
    if (!s.is_object()) throw ValidationError("field 'space' must be an object");
    reject_unknown(s, "space.", {"even", "odd", "split"});
    SpaceBlock sb;
    sb.even = get_field<std::size_t>(s, "space.", "even", 0, true);
    sb.odd = get_field<std::size_t>(s, "space.", "odd", 0, true);
    if (s.contains("split")) {
      auto v = get_field<std::vector<std::size_t>>(s, "space.", "split", {});
      if (v.size() != 2) throw ValidationError("field 'space.split' must be [n1, n2]");
      if (v[0] + v[1] != sb.even)
        throw ValidationError("field 'space.split': n1 + n2 must equal space.even");
      sb.split = {v[0], v[1]};
    }
    spec.space = sb;
  }

  if (j.contains("algebra")) {
    const auto& a = j.at("algebra");
    if (!a.is_object()) throw ValidationError("field 'algebra' must be an object");
    reject_unknown(a, "algebra.", {"builtin", "p", "q", "form", "custom"});
    AlgebraBlock ab;
    if (a.contains("builtin")) {
      ab.builtin = get_field<std::string>(a, "algebra.", "builtin", "");
      static const std::set<std::string> known = {"osp", "p", "gl", "spin_w"};
      if (!known.count(ab.builtin))
        throw ValidationError("field 'algebra.builtin' must be one of osp, p, gl, spin_w");
      ab.p = get_field<int>(a, "algebra.", "p", 0);
      ab.q = get_field<int>(a, "algebra.", "q", 0);
      if (a.contains("form"))
        ab.form = get_field<std::vector<std::vector<std::string>>>(a, "algebra.", "form", {});
    } else if (a.contains("custom")) {
      const auto& c = a.at("custom");
      if (!c.is_array()) throw ValidationError("field 'algebra.custom' must be an array");
      for (const auto& e : c) {
        reject_unknown(e, "algebra.custom[]. ", {"parity", "matrix"});
        std::string par = get_field<std::string>(e, "algebra.custom[].", "parity", "", true);
        if (par != "even" && par != "odd")
          throw ValidationError("field 'algebra.custom[].parity' must be \"even\" or \"odd\"");
        auto rows = get_field<std::vector<std::vector<std::string>>>(e, "algebra.custom[].",
                                                                     "matrix", {}, true);
        ab.custom.emplace_back(par, rows);
      }
    } else {
      throw ValidationError("field 'algebra' needs either 'builtin' or 'custom'");
    }
    spec.algebra = ab;
  }

  if (!j.contains("task")) throw ValidationError("missing field 'task'");
  const auto& t = j.at("task");
  if (!t.is_object()) throw ValidationError("field 'task' must be an object");
  reject_unknown(t, "task.",
                 {"name", "kmax", "degree", "seed", "tol", "mode", "frame", "metric", "field",
                  "t0", "t1", "steps", "escape_norm", "points", "odd_params", "components"});
  TaskBlock& tb = spec.task;
  tb.name = get_field<std::string>(t, "task.", "name", subcommand);
  if (!subcommand.empty() && tb.name != subcommand)
    throw ValidationError("task.name '" + tb.name + "' does not match the subcommand '" +
                          subcommand + "'");
  static const std::set<std::string> tasks = {"prolong", "finite-type", "admissible", "h02",
                                              "killing", "flow",        "decompose",  "check"};
  if (!tasks.count(tb.name)) throw ValidationError("unknown task '" + tb.name + "'");

  tb.kmax = get_field<std::size_t>(t, "task.", "kmax", 8);
  tb.degree = get_field<unsigned>(t, "task.", "degree", 2);
  tb.seed = get_field<unsigned>(t, "task.", "seed", 12345);
  tb.tol = get_field<double>(t, "task.", "tol", 1e-6);
  tb.killing_mode = get_field<std::string>(t, "task.", "mode", "metric");
  tb.frame = get_field<std::vector<std::string>>(t, "task.", "frame", {});
  if (t.contains("metric"))
    tb.metric = get_field<std::vector<std::vector<std::string>>>(t, "task.", "metric", {});
  tb.field = get_field<std::string>(t, "task.", "field", "");
  tb.t0 = get_field<double>(t, "task.", "t0", 0.0);
  tb.t1 = get_field<double>(t, "task.", "t1", 1.0);
  tb.steps = get_field<std::size_t>(t, "task.", "steps", 1000);
  tb.escape_norm = get_field<double>(t, "task.", "escape_norm", 1e6);
  tb.points = get_field<std::vector<std::vector<double>>>(t, "task.", "points", {});
  tb.odd_params = get_field<std::size_t>(t, "task.", "odd_params", 0);
  if (t.contains("components")) {
    const auto& c = t.at("components");
    if (!c.is_object()) throw ValidationError("field 'task.components' must be an object");
    for (const auto& [key, value] : c.items()) {
      if (!value.is_string())
        throw ValidationError("field 'task.components." + key + "' must be a string");
      tb.components.emplace_back(key, value.get<std::string>());
    }
  }

  validate_problem(spec);
  return spec;
}

void validate_problem(const ProblemSpec& spec) {
  const std::string& name = spec.task.name;
  const bool needs_algebra =
      name == "prolong" || name == "finite-type" || name == "admissible" || name == "h02";
  if (name != "check" && !spec.space) throw ValidationError("missing field 'space'");
  if (needs_algebra && !spec.algebra)
    throw ValidationError("task '" + name + "' requires an 'algebra' block");
  if (name == "admissible" && !spec.space->split)
    throw ValidationError("task 'admissible' requires 'space.split' for the mixed model data");
  if (name == "killing") {
    if (spec.task.killing_mode != "metric" && spec.task.killing_mode != "frame")
      throw ValidationError("task.mode must be \"metric\" or \"frame\"");
    if (spec.task.killing_mode == "frame" &&
        spec.task.frame.size() != spec.space->even + spec.space->odd)
      throw ValidationError("task.frame needs one field per coordinate");
  }
  if (name == "flow") {
    if (spec.task.field.empty()) throw ValidationError("task 'flow' requires 'field'");
    if (spec.task.points.empty()) throw ValidationError("task 'flow' requires 'points'");
    if (spec.task.steps == 0) throw ValidationError("task.steps must be positive");
    for (const auto& p : spec.task.points)
      if (p.size() != spec.space->even)
        throw ValidationError("each flow point needs one value per even coordinate");
  }
  if (name == "decompose") {
    if (spec.task.components.empty())
      throw ValidationError("task 'decompose' requires 'components'");
  }
  if ((name == "prolong" || name == "finite-type" || name == "admissible") && spec.task.kmax < 1)
    throw ValidationError("task.kmax must be >= 1");
}

SuperAlgebraBasis build_algebra(const ProblemSpec& spec) {
  const SpaceBlock& sb = *spec.space;
  const AlgebraBlock& ab = *spec.algebra;
  GradedDim d{sb.even, sb.odd};

  try {
    if (ab.builtin == "gl") return SuperAlgebraBasis::gl(d);
    if (ab.builtin == "osp") {
      BilinearForm j = ab.form ? BilinearForm(d, Parity::Even, parse_matrix(*ab.form))
                               : BilinearForm::standard_even(d);
      return liesuper::osp_algebra(j);
    }
    if (ab.builtin == "p") {
      BilinearForm j = ab.form ? BilinearForm(d, Parity::Odd, parse_matrix(*ab.form))
                               : BilinearForm::standard_odd(d);
      return liesuper::p_algebra(j);
    }
    if (ab.builtin == "spin_w") {
      SuperAlgebraBasis g = liesuper::spin_w_algebra(ab.p, ab.q);
      if (g.ambient() != d)
        throw ValidationError("space " + d.str() + " does not match spin_w(" +
                              std::to_string(ab.p) + "," + std::to_string(ab.q) +
                              ") which needs " + g.ambient().str());
      return g;
    }
    // custom basis
    std::vector<GlElement> elems;
    for (const auto& [par, rows] : ab.custom) {
      Matrix m = parse_matrix(rows);
      if (m.rows() != d.total() || m.cols() != d.total())
        throw ValidationError("custom matrix size does not match the space");
      elems.emplace_back(d, par == "even" ? Parity::Even : Parity::Odd, std::move(m));
    }
    return SuperAlgebraBasis(d, elems);
  } catch (const ValidationError&) {
    throw;
  } catch (const gsalg::ParityError& e) {
    throw ValidationError(e.what());
  } catch (const std::exception& e) {
    throw ComputationError(e.what());
  }
}

ordered_json ProblemSpec::to_json() const {
  ordered_json j;
  j["version"] = version;
  if (space) {
    ordered_json s;
    s["even"] = space->even;
    s["odd"] = space->odd;
    if (space->split) s["split"] = {space->split->first, space->split->second};
    j["space"] = s;
  }
  if (algebra) {
    ordered_json a;
    if (!algebra->builtin.empty()) {
      a["builtin"] = algebra->builtin;
      if (algebra->builtin == "spin_w") {
        a["p"] = algebra->p;
        a["q"] = algebra->q;
      }
      if (algebra->form) a["form"] = *algebra->form;
    } else {
      ordered_json cs = ordered_json::array();
      for (const auto& [par, rows] : algebra->custom) {
        ordered_json e;
        e["parity"] = par;
        e["matrix"] = rows;
        cs.push_back(e);
      }
      a["custom"] = cs;
    }
    j["algebra"] = a;
  }
  ordered_json t;
  t["name"] = task.name;
  if (task.name == "prolong" || task.name == "finite-type" || task.name == "admissible")
    t["kmax"] = task.kmax;
  if (task.name == "killing") {
    t["mode"] = task.killing_mode;
    t["degree"] = task.degree;
    if (task.killing_mode == "frame") t["frame"] = task.frame;
    if (task.metric) t["metric"] = *task.metric;
  }
  if (task.name == "flow") {
    t["field"] = task.field;
    t["t0"] = task.t0;
    t["t1"] = task.t1;
    t["steps"] = task.steps;
    t["escape_norm"] = task.escape_norm;
    t["tol"] = task.tol;
    t["points"] = task.points;
  }
  if (task.name == "decompose") {
    t["odd_params"] = task.odd_params;
    ordered_json comps;
    for (const auto& [key, value] : task.components) comps[key] = value;
    t["components"] = comps;
  }
  if (task.name == "check") t["seed"] = task.seed;
  j["task"] = t;
  return j;
}

} // namespace spcli
