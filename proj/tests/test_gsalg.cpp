#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsalg/mixed.hpp"
#include "gsalg/subspace.hpp"

#include <random>

using namespace gsalg;

namespace {

GaussianRational G(long n) { return GaussianRational(n); }
GaussianRational Gi(long re, long im) { return GaussianRational(Rational(re), Rational(im)); }

Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(G(x));
  return v;
}

Vec gvec(std::initializer_list<GaussianRational> xs) { return Vec(xs); }

GaussianRational random_scalar(std::mt19937_64& rng, bool complex_part = true) {
  std::uniform_int_distribution<int> d(-3, 3);
  return complex_part ? Gi(d(rng), d(rng)) : G(d(rng));
}

Matrix random_invertible_even(std::mt19937_64& rng, GradedDim d) {
  const std::size_t n = d.total();
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        bool same_block = (r < d.even) == (c < d.even);
        if (same_block) m.at(r, c) = random_scalar(rng);
      }
    if (rank(m) == n) return m;
  }
}

} // namespace

TEST_CASE("gaussian rational arithmetic and canonical form") {
  GaussianRational a(2, 4);
  CHECK(a == GaussianRational(1, 2));
  GaussianRational z = Gi(1, 2) * Gi(1, -2);
  CHECK(z == G(5));
  CHECK((Gi(0, 1) * Gi(0, 1)) == G(-1));
  CHECK((Gi(3, 1) / Gi(3, 1)) == G(1));
  CHECK_THROWS_AS(Gi(1, 0) / G(0), std::domain_error);

  CHECK(GaussianRational::parse("1/2+1/3*i") == Gi(0, 0) + GaussianRational(Rational(1, 2), Rational(1, 3)));
  CHECK(GaussianRational::parse("-i") == Gi(0, -1));
  for (const auto& g : {G(0), G(7), Gi(-2, 5), GaussianRational(Rational(1, 2), Rational(-1, 3)), Gi(0, 1)})
    CHECK(GaussianRational::parse(g.str()) == g);
}

TEST_CASE("echelon: spec examples") {
  AmbientLayout c2 = AmbientLayout::model({2, 0});

  auto full = GradedSubspace::span(c2, {vec({1, 0}), vec({1, 1})});
  CHECK(full.dim() == GradedDim{2, 0});
  CHECK(full.basis_even()[0] == vec({1, 0}));
  CHECK(full.basis_even()[1] == vec({0, 1}));

  auto zero = GradedSubspace::span(c2, {});
  CHECK(zero.dim() == GradedDim{0, 0});

  auto line = GradedSubspace::span(c2, {vec({2, 4}), vec({1, 2})});
  CHECK(line.dim() == GradedDim{1, 0});
  CHECK(line.basis_even()[0] == vec({1, 2}));

  // idempotence: echelonizing the stored basis reproduces it
  CHECK(GradedSubspace::span(c2, line.basis()) == line);

  AmbientLayout c11 = AmbientLayout::model({1, 1});
  CHECK_THROWS_AS(GradedSubspace::span(c11, {vec({1, 1})}), ParityError);
}

TEST_CASE("kernel: spec examples and rank-nullity") {
  AmbientLayout c3 = AmbientLayout::model({3, 0});
  Matrix id3 = Matrix::identity(3);
  CHECK(kernel(id3, c3).dim() == GradedDim{0, 0});

  AmbientLayout c21 = AmbientLayout::model({2, 1});
  Matrix zero(3, 3);
  CHECK(kernel(zero, c21).dim() == GradedDim{2, 1});

  Matrix m(2, 2);
  m.at(0, 0) = G(1);
  m.at(0, 1) = G(1);
  m.at(1, 0) = G(2);
  m.at(1, 1) = G(2);
  AmbientLayout c2 = AmbientLayout::model({2, 0});
  auto k = kernel(m, c2);
  CHECK(k.dim() == GradedDim{1, 0});
  CHECK(k.basis_even()[0] == gvec({G(1), G(-1)}));
  CHECK(k.dim().total() + rank(m) == 2);
}

TEST_CASE("intersect: spec examples and dimension formula") {
  AmbientLayout c2 = AmbientLayout::model({2, 0});
  auto a = GradedSubspace::span(c2, {vec({1, 0}), vec({0, 1})});
  auto b = GradedSubspace::span(c2, {vec({1, 1})});
  auto zero = GradedSubspace::zero(c2);

  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, zero) == zero);
  CHECK(intersect(a, b) == b);

  std::mt19937_64 rng(7);
  AmbientLayout c32 = AmbientLayout::model({3, 2});
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> cnt(0, 4);
    auto rand_space = [&] {
      std::vector<Vec> vs;
      int n = cnt(rng);
      for (int i = 0; i < n; ++i) {
        Vec v(5);
        bool odd = rng() % 2;
        for (std::size_t k = odd ? 3 : 0; k < (odd ? 5u : 3u); ++k) v[k] = random_scalar(rng);
        vs.push_back(v);
      }
      return GradedSubspace::span(c32, vs);
    };
    auto A = rand_space(), B = rand_space();
    auto S = sum(A, B), I = intersect(A, B);
    CHECK(S.dim().total() + I.dim().total() == A.dim().total() + B.dim().total());
    CHECK(S.dim().even + I.dim().even == A.dim().even + B.dim().even);
  }
}

TEST_CASE("echelon is a projection: any generating set gives the same basis") {
  std::mt19937_64 rng(11);
  AmbientLayout c3 = AmbientLayout::model({3, 0});
  auto s = GradedSubspace::span(c3, {gvec({G(1), Gi(0, 1), G(2)}), gvec({G(0), G(1), Gi(1, 1)})});
  for (int trial = 0; trial < 20; ++trial) {
    // random invertible recombination of the basis
    GaussianRational a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng),
                     d = random_scalar(rng);
    if ((a * d - b * c).is_zero()) continue;
    const Vec &v0 = s.basis_even()[0], &v1 = s.basis_even()[1];
    Vec w0(3), w1(3);
    for (int k = 0; k < 3; ++k) {
      w0[k] = a * v0[k] + b * v1[k];
      w1[k] = c * v0[k] + d * v1[k];
    }
    CHECK(GradedSubspace::span(c3, {w0, w1}) == s);
  }
}

TEST_CASE("realify: spec examples") {
  AmbientLayout c1 = AmbientLayout::model({1, 0});
  auto s = realify(GradedSubspace::full(c1));
  CHECK(s.dim() == GradedDim{2, 0});
  CHECK(s.basis_even()[0] == vec({1, 0}));
  CHECK(s.basis_even()[1] == vec({0, 1}));

  CHECK(realify(GradedSubspace::zero(c1)).dim() == GradedDim{0, 0});

  AmbientLayout c2 = AmbientLayout::model({2, 0});
  auto line = GradedSubspace::span(c2, {gvec({G(1), Gi(0, 1)})});
  auto r = realify(line);
  CHECK(r.dim() == GradedDim{2, 0});
  CHECK(r.contains(realify_vec(gvec({G(1), Gi(0, 1)}))));
  CHECK(r.contains(realify_vec(gvec({Gi(0, 1), G(-1)}))));
  // dim_R = 2 dim_C in general
  CHECK(r.dim().total() == 2 * line.dim().total());
}

TEST_CASE("mul_i: spec examples and involution") {
  AmbientLayout c2 = AmbientLayout::model({2, 0});
  // standard real form of C^2
  auto rn = real_span(c2, {vec({1, 0}), vec({0, 1})});
  auto irn = mul_i(rn);
  CHECK(intersect(rn, irn).dim().total() == 0);
  CHECK(mul_i(mul_i(rn)) == rn);

  auto full = GradedSubspace::full(c2.realify());
  CHECK(mul_i(full) == full);

  auto closed = real_span(c2, {vec({1, 0}), gvec({Gi(0, 1), G(0)})});
  CHECK(mul_i(closed) == closed);
}

TEST_CASE("check_mixed: model spaces and violations") {
  // model spaces (n1, n2) in {(1,0), (0,1), (2,1)}
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{1, 0}, {0, 1}, {2, 1}}) {
    auto d = MixedData::model({n1 + n2, 0}, n1, n2);
    auto r = check_mixed(d);
    CHECK_MESSAGE(r.valid, r.violation);
  }

  // extreme case V_R = V_C = V
  auto cx = MixedData::complex_space({2, 1});
  CHECK(check_mixed(cx).valid);

  // (C^2, R^2, 0) is the real-form extreme case: R^2 + i R^2 = C^2
  auto realform = MixedData::general({2, 0}, {vec({1, 0}), vec({0, 1})}, {});
  CHECK(check_mixed(realform).valid);

  // a too-small V_R fails the span condition
  auto bad = MixedData::general({2, 0}, {vec({1, 0})}, {});
  auto r = check_mixed(bad);
  CHECK_FALSE(r.valid);
  CHECK(r.violation.find("span") != std::string::npos);

  // V_C not inside V_R
  auto badc = MixedData::general({2, 0}, {vec({1, 0}), gvec({Gi(0, 1), G(0)})}, {vec({0, 1})});
  auto rc = check_mixed(badc);
  CHECK_FALSE(rc.valid);
  CHECK(rc.violation.find("containment") != std::string::npos);
}

TEST_CASE("induced_complex_part: spec examples") {
  AmbientLayout c2 = AmbientLayout::model({2, 0});
  auto rn = real_span(c2, {vec({1, 0}), vec({0, 1})});
  CHECK(induced_complex_part(rn).dim().total() == 0);

  auto full = GradedSubspace::full(c2.realify());
  CHECK(induced_complex_part(full) == full);

  // model R^1 x C^1 in C^2: recovered complex part is the second factor
  auto mixed = MixedData::model({2, 0}, 1, 1);
  auto vc = induced_complex_part(mixed.real_part());
  CHECK(vc == mixed.complex_part());
  CHECK(vc.dim().total() == 2); // C^1 really

  // i-invariance of the recovery applied to any realified complex subspace
  auto line = realify(GradedSubspace::span(c2, {gvec({G(1), Gi(2, 1)})}));
  CHECK(induced_complex_part(line) == line);
}

TEST_CASE("check_mixed accepts transformed model spaces, rejects thin real subspaces") {
  std::mt19937_64 rng(2024);
  int accepted = 0;
  std::vector<std::pair<std::size_t, std::size_t>> models = {{1, 0}, {0, 1}, {2, 1}};
  for (int trial = 0; trial < 50; ++trial) {
    auto [n1, n2] = models[trial % models.size()];
    GradedDim d{n1 + n2, 0};
    Matrix t = random_invertible_even(rng, d);
    // push the model generators through t
    std::vector<Vec> realgen, cplxgen;
    for (std::size_t k = 0; k < n1; ++k) realgen.push_back(t.apply([&] {
      Vec e(d.total());
      e[k] = G(1);
      return e;
    }()));
    for (std::size_t k = n1; k < n1 + n2; ++k) {
      Vec e(d.total());
      e[k] = G(1);
      Vec te = t.apply(e);
      realgen.push_back(te);
      Vec ite(te.size());
      for (std::size_t j = 0; j < te.size(); ++j) ite[j] = Gi(0, 1) * te[j];
      realgen.push_back(ite);
      cplxgen.push_back(te);
    }
    auto md = MixedData::mixed(d, realgen, cplxgen);
    if (check_mixed(md).valid) ++accepted;
  }
  CHECK(accepted == 50);

  int rejected = 0;
  for (int trial = 0; trial < 50; ++trial) {
    GradedDim d{3, 0};
    // too few real generators: V_R + i V_R cannot span
    std::vector<Vec> realgen;
    for (int g = 0; g < 2; ++g) {
      Vec v(3);
      for (auto& x : v) x = random_scalar(rng);
      realgen.push_back(v);
    }
    auto md = MixedData::general(d, realgen, {});
    if (!check_mixed(md).valid) ++rejected;
  }
  CHECK(rejected == 50);
}
