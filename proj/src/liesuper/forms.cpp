#include "liesuper/forms.hpp"

#include <stdexcept>

namespace liesuper {

namespace {

Parity slot_parity(const GradedDim& d, std::size_t k) {
  return k < d.even ? Parity::Even : Parity::Odd;
}

// Invariance condition for homogeneous A of the given parity, entrywise:
// for all basis pairs (i, j):
//   sum_k A_{ki} J_{kj} + (-1)^{|A||v_i|} sum_k A_{kj} J_{ik} = 0.
SuperAlgebraBasis solve_invariance(const BilinearForm& j, GradedDim ambient) {
  const std::size_t n = ambient.total();
  std::vector<GlElement> result;

  for (Parity pa : {Parity::Even, Parity::Odd}) {
    std::vector<std::pair<std::size_t, std::size_t>> unknowns; // (row k, col l)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        if (slot_parity(ambient, k) + slot_parity(ambient, l) == pa) unknowns.emplace_back(k, l);
    if (unknowns.empty()) continue;

    Matrix sys(n * n, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto [k, l] = unknowns[u];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj) {
          GaussianRational coeff;
          if (l == i) coeff += j.matrix().at(k, jj);
          if (l == jj) {
            int sign = gsalg::koszul(pa, slot_parity(ambient, i));
            GaussianRational term = j.matrix().at(i, k);
            coeff += sign < 0 ? -term : term;
          }
          if (!coeff.is_zero()) sys.at(i * n + jj, u) = coeff;
        }
    }

    for (const Vec& sol : gsalg::kernel_basis(std::move(sys))) {
      Matrix m(n, n);
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!sol[u].is_zero()) m.at(unknowns[u].first, unknowns[u].second) = sol[u];
      result.emplace_back(ambient, pa, std::move(m));
    }
  }
  return SuperAlgebraBasis(ambient, result);
}

} // namespace

BilinearForm::BilinearForm(GradedDim ambient, Parity parity, Matrix j)
    : ambient_(ambient), parity_(parity), matrix_(std::move(j)) {
  const std::size_t n = ambient_.total();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw std::invalid_argument("BilinearForm: matrix size mismatch");
  if (parity_ == Parity::Odd && ambient_.even != ambient_.odd)
    throw std::invalid_argument("BilinearForm: odd form needs dim V_0 = dim V_1");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Parity pr = slot_parity(ambient_, r), pc = slot_parity(ambient_, c);
      if (pr + pc != parity_) {
        if (!matrix_.at(r, c).is_zero())
          throw gsalg::ParityError("BilinearForm: entry outside the parity-" +
                                   std::string(parity_ == Parity::Even ? "even" : "odd") +
                                   " block structure");
        continue;
      }
      GaussianRational sym = matrix_.at(c, r);
      if (gsalg::koszul(pr, pc) < 0) sym = -sym;
      if (matrix_.at(r, c) != sym)
        throw std::invalid_argument("BilinearForm: not supersymmetric");
    }
  if (gsalg::rank(matrix_) != n) throw std::domain_error("BilinearForm: degenerate form");
}

BilinearForm BilinearForm::standard_even(GradedDim ambient) {
  if (ambient.odd % 2 != 0)
    throw std::invalid_argument("BilinearForm::standard_even: odd dimension must be even");
  const std::size_t n = ambient.total(), h = ambient.odd / 2;
  Matrix m(n, n);
  for (std::size_t k = 0; k < ambient.even; ++k) m.at(k, k) = GaussianRational(1);
  for (std::size_t k = 0; k < h; ++k) {
    m.at(ambient.even + k, ambient.even + h + k) = GaussianRational(1);
    m.at(ambient.even + h + k, ambient.even + k) = GaussianRational(-1);
  }
  return BilinearForm(ambient, Parity::Even, std::move(m));
}

BilinearForm BilinearForm::standard_odd(GradedDim ambient) {
  if (ambient.even != ambient.odd)
    throw std::invalid_argument("BilinearForm::standard_odd: needs dim V_0 = dim V_1");
  const std::size_t n = ambient.total(), h = ambient.even;
  Matrix m(n, n);
  for (std::size_t k = 0; k < h; ++k) {
    m.at(k, h + k) = GaussianRational(1);
    m.at(h + k, k) = GaussianRational(1);
  }
  return BilinearForm(ambient, Parity::Odd, std::move(m));
}

SuperAlgebraBasis osp_algebra(const BilinearForm& j) {
  if (j.parity() != Parity::Even) throw std::invalid_argument("osp_algebra: form must be even");
  return solve_invariance(j, j.ambient());
}

SuperAlgebraBasis p_algebra(const BilinearForm& j) {
  if (j.parity() != Parity::Odd) throw std::invalid_argument("p_algebra: form must be odd");
  return solve_invariance(j, j.ambient());
}

} // namespace liesuper
