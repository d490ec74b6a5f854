#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesuper/clifford.hpp"
#include "liesuper/forms.hpp"
#include "prolong/admissible.hpp"
#include "prolong/tower.hpp"

#include <random>

using namespace prolong;
using liesuper::BilinearForm;
using liesuper::GlElement;
using liesuper::SuperAlgebraBasis;

namespace {

GaussianRational G(long n) { return GaussianRational(n); }
GaussianRational Gi(long re, long im) {
  return GaussianRational(gsalg::Rational(re), gsalg::Rational(im));
}

Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m.at(r, c) = G(1);
  return m;
}

std::size_t flat_index(GradedDim d, std::size_t row, std::size_t col) {
  return col * d.total() + row;
}

// Embeds a level-1 subspace of Hom(V, g) into Hom(V, gl(V)).
std::vector<Vec> embed_into_hom_gl(const SuperAlgebraBasis& g, const GradedSubspace& level1) {
  const std::size_t n = g.ambient().total();
  const auto& elems = g.elements();
  std::vector<Vec> out;
  for (const Vec& x : level1.basis()) {
    Vec big(n * n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t beta = 0; beta < elems.size(); ++beta) {
        const GaussianRational& c = x[j * elems.size() + beta];
        if (c.is_zero()) continue;
        Vec flat = elems[beta].flat();
        for (std::size_t t = 0; t < n * n; ++t)
          if (!flat[t].is_zero()) big[j * n * n + t] += c * flat[t];
      }
    out.push_back(std::move(big));
  }
  return out;
}

GlElement random_homogeneous(std::mt19937_64& rng, GradedDim d) {
  std::uniform_int_distribution<int> coin(0, 1);
  Parity p = coin(rng) ? Parity::Odd : Parity::Even;
  const std::size_t n = d.total();
  Matrix m(n, n);
  std::uniform_int_distribution<int> val(-2, 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Parity slot = ((r < d.even) == (c < d.even)) ? Parity::Even : Parity::Odd;
      if (slot == p) m.at(r, c) = G(val(rng));
    }
  return GlElement(d, p, m);
}

} // namespace

TEST_CASE("super_antisymmetrize: spec examples") {
  GradedDim d{2, 0};
  SuperAlgebraBasis gl2 = SuperAlgebraBasis::gl(d);
  const std::size_t gdim = gl2.dim().total();
  REQUIRE(gdim == 4);

  // locate the echelon basis index of E_{12} (entry (0,1)); the full gl span
  // echelonizes to the standard flat basis, so this is just its flat index
  const Vec e12_flat = GlElement(d, Parity::Even, unit_matrix(2, 0, 1)).flat();
  std::size_t beta12 = gdim;
  for (std::size_t b = 0; b < gdim; ++b)
    if (gl2.elements()[b].flat() == e12_flat) beta12 = b;
  REQUIRE(beta12 < gdim);

  // S(e1) = E_{12}, S(e2) = 0
  Vec s(2 * gdim);
  s[0 * gdim + beta12] = G(1);
  Vec ds = super_antisymmetrize(gl2, s);
  REQUIRE(ds.size() == 2); // one pair (e1, e2), output in V
  CHECK(ds[0] == GaussianRational(1, 2));
  CHECK(ds[1] == G(0));

  // symmetric S has dS = 0: S(e1) = E_{11}, S(e2) = E_{12}
  Vec sym(2 * gdim);
  sym[0 * gdim + flat_index(d, 0, 0)] = G(1);
  sym[1 * gdim + flat_index(d, 0, 1)] = G(1);
  for (const auto& x : super_antisymmetrize(gl2, sym)) CHECK(x == G(0));

  // odd-odd pairs are symmetrized with a plus sign and include (v, v):
  // S(eta1) = E_{12}, S(eta2) = E_{11}
  GradedDim dodd{0, 2};
  SuperAlgebraBasis glodd = SuperAlgebraBasis::gl(dodd);
  Vec sodd(2 * glodd.dim().total());
  sodd[0 * 4 + flat_index(dodd, 0, 1)] = G(1);
  sodd[1 * 4 + flat_index(dodd, 0, 0)] = G(1);
  Vec dsodd = super_antisymmetrize(glodd, sodd);
  // pairs for C^{0|2}: (0,0), (0,1), (1,1); outputs in V (dim 2)
  REQUIRE(dsodd.size() == 6);
  CHECK(dsodd[0] == G(0)); // (dS)(eta1, eta1) = S(eta1) eta1 = E12 eta1 = 0
  // (dS)(eta1, eta2) = 1/2 (S(eta1) eta2 + S(eta2) eta1) = 1/2 (eta1 + eta1)
  CHECK(dsodd[2] == G(1));
  CHECK(dsodd[3] == G(0));
  CHECK(dsodd[4] == G(0)); // (dS)(eta2, eta2) = E11 eta2 = 0
  CHECK(dsodd[5] == G(0));
}

TEST_CASE("first prolongation: paper vanishing and gl counts") {
  CHECK(first_prolongation(osp_algebra(BilinearForm::standard_even({2, 2}))).dim().total() == 0);
  CHECK(first_prolongation(osp_algebra(BilinearForm::standard_even({3, 2}))).dim().total() == 0);
  CHECK(first_prolongation(p_algebra(BilinearForm::standard_odd({2, 2}))).dim().total() == 0);

  CHECK(first_prolongation(SuperAlgebraBasis::gl({1, 0})).dim() == GradedDim{1, 0});

  for (std::size_t n = 1; n <= 3; ++n) {
    auto g1 = first_prolongation(SuperAlgebraBasis::gl({n, 0}));
    CHECK(g1.dim().total() == n * (n * (n + 1) / 2));
  }
}

TEST_CASE("tower: truncation, inductive agreement, deep levels") {
  // g = 0
  ProlongationTower zt(SuperAlgebraBasis::zero({2, 1}));
  for (std::size_t k = 1; k <= 4; ++k) CHECK(zt.level(k).dim().total() == 0);

  // gl(C^{1|0}): every level has dimension 1
  ProlongationTower gl1(SuperAlgebraBasis::gl({1, 0}));
  for (std::size_t k = 0; k <= 6; ++k) CHECK(gl1.level(k).dim().total() == 1);
  auto ft = finite_type(gl1, 6);
  CHECK_FALSE(ft.finite);
  CHECK(ft.str() == "undecided(6)");

  // osp truncates at 1 and stays zero
  ProlongationTower ot(osp_algebra(BilinearForm::standard_even({2, 2})));
  CHECK(ot.level(1).dim().total() == 0);
  CHECK(ot.level(2).dim().total() == 0);
  auto oft = finite_type(ot, 8);
  CHECK(oft.finite);
  CHECK(oft.k == 1);

  // gl(C^{2|0}) level 2 = symmetric cubic maps: dim n * C(n+2, 3) = 8
  ProlongationTower gl2(SuperAlgebraBasis::gl({2, 0}));
  CHECK(gl2.level(1).dim().total() == 6);
  CHECK(gl2.level(2).dim().total() == 8);
}

TEST_CASE("definition agreement: kernel of d equals the inductive symmetric condition") {
  std::vector<SuperAlgebraBasis> corpus;
  corpus.push_back(osp_algebra(BilinearForm::standard_even({2, 2})));
  corpus.push_back(p_algebra(BilinearForm::standard_odd({2, 2})));
  corpus.push_back(liesuper::spin_w_algebra(3, 0));
  corpus.push_back(SuperAlgebraBasis::gl({2, 1}));

  std::mt19937_64 rng(42);
  std::vector<GradedDim> dims = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
  for (int i = 0; i < 10; ++i) {
    GradedDim d = dims[i % dims.size()];
    std::vector<GlElement> gens = {random_homogeneous(rng, d)};
    if (i % 2) gens.push_back(random_homogeneous(rng, d));
    corpus.push_back(generate_subalgebra(d, gens));
  }

  for (const auto& g : corpus) {
    ProlongationTower t(g);
    CHECK(t.level(1) == first_prolongation(g));
  }
}

TEST_CASE("monotonicity: osp(2|2)^(1) embeds into gl(2|2)^(1) inside Hom(V, gl)") {
  GradedDim d{2, 2};
  auto h = osp_algebra(BilinearForm::standard_even(d));
  auto g = SuperAlgebraBasis::gl(d);
  auto h1 = first_prolongation(h);
  auto g1 = first_prolongation(g);

  AmbientLayout big = hom_layout(d, g.span().basis_parities());
  auto embedded_g1 = GradedSubspace::span(big, embed_into_hom_gl(g, g1));
  for (const Vec& v : embed_into_hom_gl(h, h1)) CHECK(embedded_g1.contains(v));
}

TEST_CASE("equivariance: conjugation preserves level-1 graded dimensions") {
  std::mt19937_64 rng(99);
  GradedDim d{2, 2};
  auto g = osp_algebra(BilinearForm::standard_even(d));
  auto base = first_prolongation(g).dim();
  std::uniform_int_distribution<int> val(-2, 2);
  int done = 0;
  while (done < 20) {
    Matrix t(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        if ((r < 2) == (c < 2)) t.at(r, c) = Gi(val(rng), val(rng));
    if (gsalg::rank(t) != 4) continue;
    auto conj = liesuper::conjugate(g, t);
    CHECK(first_prolongation(conj).dim() == base);
    ++done;
  }
}

TEST_CASE("rank-nullity ties for the antisymmetrizer") {
  for (const auto& g : {SuperAlgebraBasis::gl({2, 1}), osp_algebra(BilinearForm::standard_even({2, 2}))}) {
    Matrix m = antisymmetrizer_matrix(g);
    std::size_t r = gsalg::rank(m);
    auto g1 = first_prolongation(g);
    CHECK(m.cols() == g1.dim().total() + r);
    GradedDim h02 = h02_dimension(g);
    CHECK(h02.total() == m.rows() - r);
  }
}

TEST_CASE("h02: spec examples") {
  CHECK(h02_dimension(SuperAlgebraBasis::gl({2, 0})).total() == 0);
  CHECK(h02_dimension(SuperAlgebraBasis::gl({1, 1})).total() == 0);
  CHECK(h02_dimension(SuperAlgebraBasis::gl({2, 1})).total() == 0);

  // g = 0: H^{0,2} is all of Hom(Lambda^2 V, V)
  GradedDim d{2, 0};
  auto zero = SuperAlgebraBasis::zero(d);
  GradedDim h = h02_dimension(zero);
  CHECK(h.total() == hom_lambda2_layout(d).size());

  // osp(C^{3|0}): g^(1) = 0 so h02 = dim Hom(Lambda^2 V, V) - dim Hom(V, g)
  auto so3 = osp_algebra(BilinearForm::standard_even({3, 0}));
  REQUIRE(first_prolongation(so3).dim().total() == 0);
  GradedDim h3 = h02_dimension(so3);
  CHECK(h3.total() == hom_lambda2_layout({3, 0}).size() - 3 * so3.dim().total());
}

TEST_CASE("hom_mu_real: extreme and model cases") {
  // V fully complex: no constraint, the full realification survives
  GradedDim d{2, 2};
  auto g = osp_algebra(BilinearForm::standard_even(d));
  ProlongationTower t1(g);
  auto wr_full = hom_mu_real(t1, MixedData::complex_space(d), 0);
  CHECK(wr_full.dim().total() == 2 * g.dim().even);

  // osp on the totally real model: o(2, R) + realified sp(2, C) = 1 + 6
  ProlongationTower t2(g);
  auto wr = hom_mu_real(t2, MixedData::model(d, 2, 0), 0);
  CHECK(wr.dim().total() == 7);
}

TEST_CASE("is_admissible: osp admissible, gl on a strictly mixed space fails at level 0") {
  GradedDim d{2, 2};
  auto g = osp_algebra(BilinearForm::standard_even(d));
  ProlongationTower t(g);
  auto res = is_admissible(t, MixedData::model(d, 2, 0), 8);
  CHECK(res.verdict == AdmissibilityResult::Verdict::Admissible);
  REQUIRE(!res.levels.empty());
  CHECK(res.levels[0].real_even_dim == 7);

  auto p = p_algebra(BilinearForm::standard_odd(d));
  ProlongationTower tp(p);
  auto resp = is_admissible(tp, MixedData::model(d, 2, 0), 8);
  CHECK(resp.verdict == AdmissibilityResult::Verdict::Admissible);

  ProlongationTower tg(SuperAlgebraBasis::gl(d));
  auto resg = is_admissible(tg, MixedData::model(d, 1, 1), 4);
  CHECK(resg.verdict == AdmissibilityResult::Verdict::Inadmissible);
  CHECK(resg.failed_level == 0);
  CHECK(resg.levels[0].check.violation.find("span") != std::string::npos);
}
