#include "prolong/tower.hpp"

#include <stdexcept>

namespace prolong {

namespace {

Parity slot_parity(const GradedDim& d, std::size_t k) {
  return k < d.even ? Parity::Even : Parity::Odd;
}

} // namespace

PairTable PairTable::build(const AmbientLayout& v) {
  PairTable t;
  const std::size_t n = v.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (a == b && v.slots[a] == Parity::Even) continue;
      t.pairs.emplace_back(a, b);
      t.parities.push_back(v.slots[a] + v.slots[b]);
    }
  return t;
}

AmbientLayout hom_layout(GradedDim v, const std::vector<Parity>& target_parities) {
  return AmbientLayout::hom(AmbientLayout::model(v), target_parities);
}

AmbientLayout hom_lambda2_layout(GradedDim v) {
  PairTable t = PairTable::build(AmbientLayout::model(v));
  AmbientLayout pairs;
  pairs.slots = t.parities;
  return AmbientLayout::hom(pairs, AmbientLayout::model(v).slots);
}

Matrix antisymmetrizer_matrix(const SuperAlgebraBasis& g) {
  const GradedDim vd = g.ambient();
  const std::size_t n = vd.total();
  const auto& elems = g.elements();
  PairTable table = PairTable::build(AmbientLayout::model(vd));

  // Column (j, beta) is S = E_j^* tensor g_beta; row ((a,b), c) is the
  // c-coordinate of (dS)(e_a, e_b).
  Matrix m(table.pairs.size() * n, n * elems.size());
  const GaussianRational half(1, 2);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t beta = 0; beta < elems.size(); ++beta) {
      const std::size_t col = j * elems.size() + beta;
      const Matrix& gb = elems[beta].matrix();
      for (std::size_t p = 0; p < table.pairs.size(); ++p) {
        auto [a, b] = table.pairs[p];
        int sign = gsalg::koszul(slot_parity(vd, a), slot_parity(vd, b));
        for (std::size_t c = 0; c < n; ++c) {
          GaussianRational val;
          if (a == j) val += gb.at(c, b);            // S(e_a) e_b
          if (b == j) {
            GaussianRational t = gb.at(c, a);        // S(e_b) e_a
            val -= sign < 0 ? -t : t;
          }
          if (!val.is_zero()) m.at(p * n + c, col) = val * half;
        }
      }
    }
  return m;
}

Vec super_antisymmetrize(const SuperAlgebraBasis& g, const Vec& s) {
  Matrix m = antisymmetrizer_matrix(g);
  if (s.size() != m.cols())
    throw std::invalid_argument("super_antisymmetrize: element has wrong length");
  return m.apply(s);
}

GradedSubspace first_prolongation(const SuperAlgebraBasis& g) {
  Matrix m = antisymmetrizer_matrix(g);
  AmbientLayout cols = hom_layout(g.ambient(), g.span().basis_parities());
  return gsalg::kernel(m, cols);
}

GradedDim h02_dimension(const SuperAlgebraBasis& g) {
  Matrix m = antisymmetrizer_matrix(g);
  AmbientLayout cols = hom_layout(g.ambient(), g.span().basis_parities());
  AmbientLayout rows = hom_lambda2_layout(g.ambient());
  GradedDim rowdim = rows.dim();
  GradedDim coldim = cols.dim();
  GradedDim kerdim = gsalg::kernel(m, cols).dim();
  // The map is parity-homogeneous, so rank splits by parity.
  return {rowdim.even - (coldim.even - kerdim.even), rowdim.odd - (coldim.odd - kerdim.odd)};
}

ProlongationTower::ProlongationTower(SuperAlgebraBasis g)
    : g_(std::move(g)), table_(PairTable::build(AmbientLayout::model(g_.ambient()))) {
  levels_.push_back(g_.span());
  const std::size_t n = g_.ambient().total();
  std::vector<std::vector<Vec>> ev0;
  for (const auto& e : g_.elements()) {
    std::vector<Vec> cols;
    for (std::size_t a = 0; a < n; ++a) {
      Vec col(n);
      for (std::size_t c = 0; c < n; ++c) col[c] = e.matrix().at(c, a);
      cols.push_back(std::move(col));
    }
    ev0.push_back(std::move(cols));
  }
  ev_.push_back(std::move(ev0));
  h02_.push_back(h02_dimension(g_));
}

const GradedSubspace& ProlongationTower::level(std::size_t k) {
  while (levels_.size() <= k) extend();
  return levels_[k];
}

const Vec& ProlongationTower::eval(std::size_t k, std::size_t beta, std::size_t a) const {
  return ev_.at(k).at(beta).at(a);
}

GradedDim ProlongationTower::h02_at(std::size_t k) {
  level(k + 1); // forces the level-k system to be assembled
  return h02_.at(k);
}

void ProlongationTower::extend() {
  const std::size_t k = levels_.size(); // computing g^(k)
  const GradedDim vd = g_.ambient();
  const std::size_t n = vd.total();
  const GradedSubspace& prev = levels_[k - 1];
  const std::size_t prev_dim = prev.dim().total();
  const std::vector<Parity> prev_par = prev.basis_parities();
  // Values X(v)(w) live in g^(k-2) (in V when k = 1).
  const GradedDim val_dim = k == 1 ? vd : levels_[k - 2].dim();
  const std::size_t val_len = k == 1 ? n : val_dim.total();

  AmbientLayout cols = hom_layout(vd, prev_par);

  if (prev_dim == 0) {
    levels_.push_back(GradedSubspace::zero(cols));
    ev_.emplace_back();
    if (h02_.size() == k - 1) {
      // The symmetry map is zero, so the obstruction space is the full target.
      GradedDim rows{0, 0};
      for (std::size_t p = 0; p < table_.pairs.size(); ++p)
        for (std::size_t c = 0; c < val_len; ++c) {
          Parity rp = table_.parities[p] +
                      (k == 1 ? slot_parity(vd, c)
                              : (c < val_dim.even ? Parity::Even : Parity::Odd));
          (gsalg::is_odd(rp) ? rows.odd : rows.even)++;
        }
      h02_.push_back(rows);
    }
    return;
  }

  // Rows: one block of value coordinates per Lambda^2 pair; the value is
  // X(e_a)(e_b) - (-1)^{|a||b|} X(e_b)(e_a), expanded over the level (k-1)
  // evaluation vectors.
  Matrix m(table_.pairs.size() * val_len, n * prev_dim);
  for (std::size_t p = 0; p < table_.pairs.size(); ++p) {
    auto [a, b] = table_.pairs[p];
    int sign = gsalg::koszul(slot_parity(vd, a), slot_parity(vd, b));
    for (std::size_t beta = 0; beta < prev_dim; ++beta) {
      const Vec& eb = eval(k - 1, beta, b);
      const Vec& ea = eval(k - 1, beta, a);
      const std::size_t col_a = a * prev_dim + beta;
      const std::size_t col_b = b * prev_dim + beta;
      for (std::size_t c = 0; c < val_len; ++c) {
        if (!eb[c].is_zero()) m.at(p * val_len + c, col_a) += eb[c];
        GaussianRational t = ea[c];
        if (!t.is_zero()) m.at(p * val_len + c, col_b) -= sign < 0 ? -t : t;
      }
    }
  }

  GradedSubspace next = gsalg::kernel(m, cols);

  std::vector<std::vector<Vec>> evk;
  for (const Vec& x : next.basis()) {
    std::vector<Vec> per_a;
    for (std::size_t a = 0; a < n; ++a)
      per_a.emplace_back(x.begin() + a * prev_dim, x.begin() + (a + 1) * prev_dim);
    evk.push_back(std::move(per_a));
  }

  // Torsion at level k-1: coker dims of the symmetry map just assembled
  // (level 0 was already recorded by the constructor).
  if (h02_.size() == k - 1) {
    GradedDim rows{0, 0};
    for (std::size_t p = 0; p < table_.pairs.size(); ++p)
      for (std::size_t c = 0; c < val_len; ++c) {
        Parity rp = table_.parities[p] +
                    (k == 1 ? slot_parity(vd, c)
                            : (c < val_dim.even ? Parity::Even : Parity::Odd));
        (gsalg::is_odd(rp) ? rows.odd : rows.even)++;
      }
    GradedDim coldim = cols.dim();
    GradedDim kerdim = next.dim();
    h02_.push_back(GradedDim{rows.even - (coldim.even - kerdim.even),
                             rows.odd - (coldim.odd - kerdim.odd)});
  }

  levels_.push_back(std::move(next));
  ev_.push_back(std::move(evk));
}

FiniteTypeResult finite_type(ProlongationTower& t, std::size_t kmax) {
  if (kmax < 1) throw std::invalid_argument("finite_type: kmax must be >= 1");
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (t.level(k).dim().total() == 0) {
      FiniteTypeResult r;
      r.finite = true;
      r.k = k;
      r.kmax = kmax;
      return r;
    }
  }
  FiniteTypeResult r;
  r.finite = false;
  r.kmax = kmax;
  return r;
}

} // namespace prolong
