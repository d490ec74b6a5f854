#include "gsalg/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsalg {

namespace {

// RREF of a list of vectors (as rows); drops zero rows.
std::vector<Vec> echelon_rows(std::vector<Vec> rows, std::size_t width) {
  if (rows.empty()) return rows;
  Matrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  std::size_t r = rref(m).size();
  std::vector<Vec> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) out.push_back(m.row(i));
  return out;
}

} // namespace

std::optional<Parity> vector_parity(const AmbientLayout& layout, const Vec& v) {
  if (v.size() != layout.size()) throw std::invalid_argument("vector_parity: length mismatch");
  std::optional<Parity> p;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!p)
      p = layout.slots[k];
    else if (*p != layout.slots[k])
      throw ParityError("vector with mixed parity support");
  }
  return p;
}

GradedSubspace GradedSubspace::full(AmbientLayout layout) {
  std::vector<Vec> vecs;
  const std::size_t n = layout.size();
  for (std::size_t k = 0; k < n; ++k) {
    Vec e(n);
    e[k] = GaussianRational(1);
    vecs.push_back(std::move(e));
  }
  return span(std::move(layout), vecs);
}

GradedSubspace GradedSubspace::span(AmbientLayout layout, const std::vector<Vec>& vectors) {
  GradedSubspace s(std::move(layout));
  std::vector<Vec> ev, od;
  for (const Vec& v : vectors) {
    auto p = vector_parity(s.layout_, v);
    if (!p) continue;
    (is_odd(*p) ? od : ev).push_back(v);
  }
  s.basis_even_ = echelon_rows(std::move(ev), s.layout_.size());
  s.basis_odd_ = echelon_rows(std::move(od), s.layout_.size());
  return s;
}

std::vector<Vec> GradedSubspace::basis() const {
  std::vector<Vec> b = basis_even_;
  b.insert(b.end(), basis_odd_.begin(), basis_odd_.end());
  return b;
}

std::vector<Parity> GradedSubspace::basis_parities() const {
  std::vector<Parity> p(basis_even_.size(), Parity::Even);
  p.insert(p.end(), basis_odd_.size(), Parity::Odd);
  return p;
}

bool GradedSubspace::contains(const Vec& v) const {
  auto p = vector_parity(layout_, v);
  if (!p) return true;
  const std::vector<Vec>& rows = is_odd(*p) ? basis_odd_ : basis_even_;
  // Reduce v against the echelon basis; membership iff the residue is zero.
  Vec w = v;
  for (const Vec& row : rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero()) ++lead;
    if (lead == row.size()) continue;
    if (w[lead].is_zero()) continue;
    const GaussianRational f = w[lead]; // row is normalized, pivot == 1
    for (std::size_t k = lead; k < w.size(); ++k)
      if (!row[k].is_zero()) w[k] -= f * row[k];
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  for (const Vec& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.layout() != b.layout()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<Vec> all = a.basis();
  for (const Vec& v : b.basis()) all.push_back(v);
  return GradedSubspace::span(a.layout(), all);
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.layout() != b.layout()) throw std::invalid_argument("intersect: ambient mismatch");
  // Per parity: v in A cap B iff v = sum x_i a_i = sum y_j b_j; solve the
  // joint kernel in (x, y) and read off the A-side combination.
  std::vector<Vec> out;
  const std::size_t n = a.layout().size();
  for (int pass = 0; pass < 2; ++pass) {
    const std::vector<Vec>& ba = pass == 0 ? a.basis_even() : a.basis_odd();
    const std::vector<Vec>& bb = pass == 0 ? b.basis_even() : b.basis_odd();
    if (ba.empty() || bb.empty()) continue;
    Matrix m(n, ba.size() + bb.size());
    for (std::size_t j = 0; j < ba.size(); ++j)
      for (std::size_t k = 0; k < n; ++k) m.at(k, j) = ba[j][k];
    for (std::size_t j = 0; j < bb.size(); ++j)
      for (std::size_t k = 0; k < n; ++k) m.at(k, ba.size() + j) = -bb[j][k];
    for (const Vec& ker : kernel_basis(std::move(m))) {
      Vec v(n);
      for (std::size_t j = 0; j < ba.size(); ++j) {
        if (ker[j].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!ba[j][k].is_zero()) v[k] += ker[j] * ba[j][k];
      }
      out.push_back(std::move(v));
    }
  }
  return GradedSubspace::span(a.layout(), out);
}

GradedSubspace kernel(const Matrix& m, const AmbientLayout& columns) {
  if (m.cols() != columns.size()) throw std::invalid_argument("kernel: column layout mismatch");
  std::vector<Vec> out;
  for (int pass = 0; pass < 2; ++pass) {
    const Parity p = pass == 0 ? Parity::Even : Parity::Odd;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (columns.slots[c] == p) cols.push_back(c);
    if (cols.empty()) continue;
    Matrix sub(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) sub.at(r, j) = m.at(r, cols[j]);
    for (const Vec& k : kernel_basis(std::move(sub))) {
      Vec v(columns.size());
      for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = k[j];
      out.push_back(std::move(v));
    }
  }
  return GradedSubspace::span(columns, out);
}

Vec realify_vec(const Vec& v) {
  Vec r(2 * v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    r[2 * k] = GaussianRational(v[k].re());
    r[2 * k + 1] = GaussianRational(v[k].im());
  }
  return r;
}

Vec complexify_vec(const Vec& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("complexify_vec: odd length");
  Vec c(v.size() / 2);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!v[2 * k].is_real() || !v[2 * k + 1].is_real())
      throw std::invalid_argument("complexify_vec: non-real realified entries");
    c[k] = GaussianRational(v[2 * k].re(), v[2 * k + 1].re());
  }
  return c;
}

Vec mul_i_vec(const Vec& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("mul_i_vec: odd length");
  Vec r(v.size());
  for (std::size_t k = 0; k + 1 < v.size(); k += 2) {
    r[k] = -v[k + 1];
    r[k + 1] = v[k];
  }
  return r;
}

GradedSubspace real_span(const AmbientLayout& complex_layout, const std::vector<Vec>& vectors) {
  std::vector<Vec> rv;
  rv.reserve(vectors.size());
  for (const Vec& v : vectors) rv.push_back(realify_vec(v));
  return GradedSubspace::span(complex_layout.realify(), rv);
}

GradedSubspace realify(const GradedSubspace& s) {
  if (s.layout().realified) throw std::invalid_argument("realify: already real");
  std::vector<Vec> rv;
  for (const Vec& v : s.basis()) {
    rv.push_back(realify_vec(v));
    Vec iv(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) iv[k] = GaussianRational::i() * v[k];
    rv.push_back(realify_vec(iv));
  }
  return GradedSubspace::span(s.layout().realify(), rv);
}

GradedSubspace mul_i(const GradedSubspace& s) {
  if (!s.layout().realified) throw std::invalid_argument("mul_i: expects a realified ambient");
  std::vector<Vec> rv;
  for (const Vec& v : s.basis()) rv.push_back(mul_i_vec(v));
  return GradedSubspace::span(s.layout(), rv);
}

GradedSubspace complexify(const GradedSubspace& s, const AmbientLayout& complex_layout) {
  if (!s.layout().realified) throw std::invalid_argument("complexify: expects a realified ambient");
  if (mul_i(s) != s) throw std::invalid_argument("complexify: subspace is not i-invariant");
  std::vector<Vec> cv;
  for (const Vec& v : s.basis()) cv.push_back(complexify_vec(v));
  return GradedSubspace::span(complex_layout, cv);
}

} // namespace gsalg
