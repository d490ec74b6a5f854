#include "liesuper/clifford.hpp"
#include "liesuper/forms.hpp"

#include <stdexcept>

namespace liesuper {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b.at(k, l).is_zero())
            r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Matrix pauli(int which) {
  Matrix m(2, 2);
  switch (which) {
  case 1:
    m.at(0, 1) = GaussianRational(1);
    m.at(1, 0) = GaussianRational(1);
    break;
  case 2:
    m.at(0, 1) = -GaussianRational::i();
    m.at(1, 0) = GaussianRational::i();
    break;
  case 3:
    m.at(0, 0) = GaussianRational(1);
    m.at(1, 1) = GaussianRational(-1);
    break;
  default:
    throw std::logic_error("pauli: bad index");
  }
  return m;
}

// Generators with gamma_a^2 = +1 for all a, by the 2x2 tensor recursion.
std::vector<Matrix> positive_gammas(int n) {
  if (n == 0) return {};
  if (n == 1) {
    Matrix g(1, 1);
    g.at(0, 0) = GaussianRational(1);
    return {g};
  }
  if (n % 2 == 0) {
    std::vector<Matrix> prev = positive_gammas(n - 2);
    std::size_t d = prev.empty() ? 1 : prev[0].rows();
    Matrix id = Matrix::identity(d);
    std::vector<Matrix> out;
    for (const Matrix& g : prev) out.push_back(kron(g, pauli(3)));
    out.push_back(kron(id, pauli(1)));
    out.push_back(kron(id, pauli(2)));
    return out;
  }
  // odd n = 2k+1: append i^{k(2k-1)} * gamma_1 ... gamma_{2k}
  std::vector<Matrix> out = positive_gammas(n - 1);
  int k = (n - 1) / 2;
  Matrix prod = Matrix::identity(out[0].rows());
  for (const Matrix& g : out) prod = prod * g;
  GaussianRational phase(1);
  for (int e = 0; e < (k * (2 * k - 1)) % 4; ++e) phase *= GaussianRational::i();
  out.push_back(prod.scaled(phase));
  return out;
}

} // namespace

CliffordRep clifford_rep(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("clifford_rep: need p + q >= 1");
  CliffordRep rep;
  rep.p = p;
  rep.q = q;
  rep.gammas = positive_gammas(p + q);
  rep.spinor_dim = rep.gammas[0].rows();
  // negative-square generators pick up a factor i
  for (int a = p; a < p + q; ++a) rep.gammas[a] = rep.gammas[a].scaled(GaussianRational::i());
  return rep;
}

Matrix spin_action(const CliffordRep& rep, const Matrix& a) {
  const std::size_t n = rep.gammas.size();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("spin_action: size mismatch");
  // rho(a) = 1/4 sum_{ij} (a eta^{-1})_{ij} gamma_i gamma_j; eta is its own
  // inverse, so (a eta^{-1})_{ij} = a_{ij} eta_{jj}.
  Matrix rho(rep.spinor_dim, rep.spinor_dim);
  const GaussianRational quarter(1, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(i, j).is_zero()) continue;
      GaussianRational c = a.at(i, j) * quarter;
      if (j >= static_cast<std::size_t>(rep.p)) c = -c;
      rho = rho + (rep.gammas[i] * rep.gammas[j]).scaled(c);
    }
  return rho;
}

SuperAlgebraBasis spin_w_algebra(int p, int q) {
  CliffordRep rep = clifford_rep(p, q);
  const std::size_t n0 = static_cast<std::size_t>(p + q);
  const std::size_t n1 = rep.spinor_dim;
  GradedDim ambient{n0, n1};

  // so(p, q) from the even-only invariance problem with J = eta.
  Matrix eta(n0, n0);
  for (std::size_t k = 0; k < n0; ++k)
    eta.at(k, k) = GaussianRational(k < static_cast<std::size_t>(p) ? 1 : -1);
  BilinearForm etaform(GradedDim{n0, 0}, Parity::Even, eta);
  SuperAlgebraBasis so = osp_algebra(etaform);

  std::vector<GlElement> elems;
  for (const GlElement& a : so.elements()) {
    Matrix rho = spin_action(rep, a.matrix());
    Matrix m(n0 + n1, n0 + n1);
    for (std::size_t r = 0; r < n0; ++r)
      for (std::size_t c = 0; c < n0; ++c) m.at(r, c) = a.matrix().at(r, c);
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t c = 0; c < n1; ++c) m.at(n0 + r, n0 + c) = rho.at(r, c);
    elems.emplace_back(ambient, Parity::Even, std::move(m));
  }

  // W: f_s(e_i) = gamma_i s, one generator per spinor basis vector.
  for (std::size_t beta = 0; beta < n1; ++beta) {
    Matrix m(n0 + n1, n0 + n1);
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t sigma = 0; sigma < n1; ++sigma)
        m.at(n0 + sigma, i) = rep.gammas[i].at(sigma, beta);
    elems.emplace_back(ambient, Parity::Odd, std::move(m));
  }

  return SuperAlgebraBasis(ambient, elems);
}

} // namespace liesuper
