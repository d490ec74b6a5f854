#include "prolong/admissible.hpp"

#include <stdexcept>

namespace prolong {

namespace {

using gsalg::GradedSubspace;

// Slices a subspace of a realified model ambient to its even-slot block
// (the first 2*d_even coordinates).
GradedSubspace even_block(const GradedSubspace& s, std::size_t d_even) {
  AmbientLayout even_layout = AmbientLayout::model(GradedDim{d_even, 0}).realify();
  std::vector<Vec> vecs;
  for (const Vec& v : s.basis_even())
    vecs.emplace_back(v.begin(), v.begin() + 2 * d_even);
  return GradedSubspace::span(even_layout, vecs);
}

// Annihilator functionals of a real subspace, as plain vectors.
std::vector<Vec> annihilator(const GradedSubspace& s) {
  const std::size_t n = s.layout().size();
  std::vector<Vec> rows = s.basis();
  Matrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return gsalg::kernel_basis(std::move(m));
}

GaussianRational dot(const Vec& a, const Vec& b) {
  GaussianRational r;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) r += a[k] * b[k];
  return r;
}

struct Generator {
  Vec element;  // complex vector in V (full length, even support)
  bool to_real; // constrain into W_R (else W_C)
};

struct ChainState {
  std::vector<Generator> gens;
  GradedSubspace wr_prev, wc_prev;
  std::size_t prev_even = 0;
};

ChainState chain_start(ProlongationTower& t, const MixedData& mixed) {
  if (mixed.ambient() != t.v_dim())
    throw std::invalid_argument("level_mixed_chain: mixed data ambient does not match V");
  auto base_check = gsalg::check_mixed(mixed);
  if (!base_check.valid)
    throw std::invalid_argument("level_mixed_chain: invalid mixed data on V: " +
                                base_check.violation);

  const GradedDim vd = t.v_dim();
  const std::size_t n = vd.total();

  ChainState st;
  auto add_gens = [&](const GradedSubspace& part, bool to_real) {
    for (const Vec& v : part.basis_even()) {
      Vec sliced(v.begin(), v.begin() + 2 * vd.even);
      Vec vc = gsalg::complexify_vec(sliced);
      vc.resize(n);
      st.gens.push_back({std::move(vc), to_real});
    }
  };
  add_gens(mixed.real_part(), true);
  add_gens(mixed.complex_part(), false);

  st.wr_prev = even_block(mixed.real_part(), vd.even);
  st.wc_prev = even_block(mixed.complex_part(), vd.even);
  st.prev_even = vd.even;
  return st;
}

// One step of the recursion: the level-k pair from the level-(k-1) pair.
LevelMixedStructure chain_step(ProlongationTower& t, ChainState& st, std::size_t k) {
  const std::size_t n = t.v_dim().total();
  const GradedSubspace& lvl = t.level(k);
  const std::size_t ek = lvl.dim().even;
  AmbientLayout rlayout = AmbientLayout::model(GradedDim{ek, 0}).realify();

  std::vector<Vec> ann_r = annihilator(st.wr_prev);
  std::vector<Vec> ann_c = annihilator(st.wc_prev);

  std::vector<Vec> rows;
  for (const Generator& gen : st.gens) {
    const std::vector<Vec>& ann = gen.to_real ? ann_r : ann_c;
    if (ann.empty()) continue;
    // realified value columns for the real and imaginary coefficient parts
    std::vector<Vec> col_a(ek), col_b(ek);
    for (std::size_t beta = 0; beta < ek; ++beta) {
      Vec val(st.prev_even);
      for (std::size_t a = 0; a < n; ++a) {
        if (gen.element[a].is_zero()) continue;
        const Vec& ev = t.eval(k, beta, a);
        for (std::size_t c = 0; c < st.prev_even; ++c)
          if (!ev[c].is_zero()) val[c] += gen.element[a] * ev[c];
      }
      Vec ival(val.size());
      for (std::size_t c = 0; c < val.size(); ++c) ival[c] = GaussianRational::i() * val[c];
      col_a[beta] = gsalg::realify_vec(val);
      col_b[beta] = gsalg::realify_vec(ival);
    }
    for (const Vec& lam : ann) {
      Vec row(2 * ek);
      bool nonzero = false;
      for (std::size_t beta = 0; beta < ek; ++beta) {
        row[2 * beta] = dot(lam, col_a[beta]);
        row[2 * beta + 1] = dot(lam, col_b[beta]);
        nonzero = nonzero || !row[2 * beta].is_zero() || !row[2 * beta + 1].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  GradedSubspace wr;
  if (rows.empty()) {
    wr = GradedSubspace::full(rlayout);
  } else {
    Matrix m(rows.size(), 2 * ek);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    wr = gsalg::kernel(m, rlayout);
  }
  GradedSubspace wc = gsalg::induced_complex_part(wr);

  st.wr_prev = wr;
  st.wc_prev = wc;
  st.prev_even = ek;
  return {std::move(wr), std::move(wc)};
}

} // namespace

std::vector<LevelMixedStructure> level_mixed_chain(ProlongationTower& t, const MixedData& mixed,
                                                   std::size_t kmax) {
  ChainState st = chain_start(t, mixed);
  std::vector<LevelMixedStructure> chain;
  for (std::size_t k = 0; k <= kmax; ++k) chain.push_back(chain_step(t, st, k));
  return chain;
}

GradedSubspace hom_mu_real(ProlongationTower& t, const MixedData& mixed, std::size_t k) {
  return level_mixed_chain(t, mixed, k).back().w_r;
}

AdmissibilityResult is_admissible(ProlongationTower& t, const MixedData& mixed, std::size_t kmax) {
  AdmissibilityResult result;
  result.verdict = AdmissibilityResult::Verdict::Undecided;

  ChainState st = chain_start(t, mixed);
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (t.level(k).dim().total() == 0) {
      // zero levels (and everything above) are trivially mixed
      result.tower_vanished = true;
      result.verdict = AdmissibilityResult::Verdict::Admissible;
      return result;
    }
    LevelMixedStructure lm = chain_step(t, st, k);
    AdmissibilityLevel lvl;
    lvl.dim = t.level(k).dim();
    lvl.real_even_dim = lm.w_r.dim().total();
    lvl.complex_even_dim = lm.w_c.dim().total() / 2;
    lvl.check = gsalg::check_mixed(
        MixedData::from_parts(GradedDim{t.level(k).dim().even, 0}, lm.w_r, lm.w_c));
    result.levels.push_back(lvl);
    if (!lvl.check.valid) {
      result.verdict = AdmissibilityResult::Verdict::Inadmissible;
      result.failed_level = k;
      return result;
    }
  }
  return result;
}

} // namespace prolong
