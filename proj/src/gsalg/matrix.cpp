#include "gsalg/matrix.hpp"

#include <stdexcept>

namespace gsalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::set_row: size mismatch");
  for (std::size_t c = 0; c < cols_; ++c) a_[r * cols_ + c] = v[c];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const GaussianRational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const GaussianRational& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::scaled(const GaussianRational& s) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const GaussianRational& aij = at(i, j);
      if (!aij.is_zero() && !v[j].is_zero()) r[i] += aij * v[j];
    }
  return r;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
    GaussianRational inv = GaussianRational(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const GaussianRational f = m.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m.at(r, j).is_zero()) continue;
        m.at(i, j) -= f * m.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> kernel_basis(Matrix m) {
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = GaussianRational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(Matrix m, Vec b, Vec& x) {
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return false; // inconsistent
  x.assign(n, GaussianRational());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, n);
  return true;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("Matrix::inverse: not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = GaussianRational(1);
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots[n - 1] != n - 1)
    throw std::domain_error("Matrix::inverse: singular matrix");
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

} // namespace gsalg
