#ifndef GSALG_MATRIX_HPP
#define GSALG_MATRIX_HPP

#include "gsalg/gaussian_rational.hpp"

#include <cstddef>

namespace gsalg {

// Dense matrix over Q(i).  Row elimination skips zero entries, which keeps
// the very sparse prolongation systems cheap despite dense storage.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }
  void set_row(std::size_t r, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const GaussianRational& s) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Vec apply(const Vec& v) const; // matrix * column vector

private:
  std::size_t rows_, cols_;
  std::vector<GaussianRational> a_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Basis of the right kernel {x : m x = 0}, one vector per free column,
// in the canonical RREF parametrization.
std::vector<Vec> kernel_basis(Matrix m);

// Solves m x = b; returns false if inconsistent.  Used where a unique
// solution is known to exist.
bool solve(Matrix m, Vec b, Vec& x);

Matrix inverse(const Matrix& m); // throws std::domain_error if singular

} // namespace gsalg

#endif
