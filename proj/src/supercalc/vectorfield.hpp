#ifndef SUPERCALC_VECTORFIELD_HPP
#define SUPERCALC_VECTORFIELD_HPP

#include "supercalc/grassmann.hpp"

namespace supercalc {

// Homogeneous superderivation X = sum_i a_i d/dx_i + sum_j b_j d/deta_j.
// Coefficient parities: |a_i| = |X|, |b_j| = |X| + 1.
class SuperVectorField {
public:
  SuperVectorField(std::size_t n_even, std::size_t n_odd, Parity parity);
  SuperVectorField(std::size_t n_even, std::size_t n_odd, Parity parity,
                   std::vector<GrassmannPoly> coeffs);

  static SuperVectorField d_coord(std::size_t n_even, std::size_t n_odd, std::size_t coord);

  std::size_t n_even() const { return n_even_; }
  std::size_t n_odd() const { return n_odd_; }
  std::size_t n_coords() const { return n_even_ + n_odd_; }
  Parity parity() const { return parity_; }

  const GrassmannPoly& coeff(std::size_t coord) const { return coeffs_[coord]; }
  const std::vector<GrassmannPoly>& coeffs() const { return coeffs_; }
  void set_coeff(std::size_t coord, GrassmannPoly c); // revalidates parity

  bool is_zero() const;

  GrassmannPoly apply(const GrassmannPoly& f) const;

  SuperVectorField operator+(const SuperVectorField& o) const;
  SuperVectorField scaled(const GaussianRational& c) const;

  std::string str() const;

  friend bool operator==(const SuperVectorField& a, const SuperVectorField& b) {
    return a.n_even_ == b.n_even_ && a.n_odd_ == b.n_odd_ && a.coeffs_ == b.coeffs_;
  }

private:
  void validate(std::size_t coord) const;

  std::size_t n_even_, n_odd_;
  Parity parity_;
  std::vector<GrassmannPoly> coeffs_;
};

// [X, Y] = XY - (-1)^{|X||Y|} YX, again a derivation.
SuperVectorField vf_bracket(const SuperVectorField& x, const SuperVectorField& y);

// Even with real-bodied d/dx coefficients: the class of fields with flows.
bool is_even_real_vf(const SuperVectorField& x);

} // namespace supercalc

#endif
