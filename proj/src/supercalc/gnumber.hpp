#ifndef SUPERCALC_GNUMBER_HPP
#define SUPERCALC_GNUMBER_HPP

#include "supercalc/grassmann.hpp"

#include <complex>

namespace supercalc {

using Complex = std::complex<double>;

// Numeric element of the Grassmann algebra on m generators: one complex
// coefficient per odd multi-index.  This is the value type of the flow
// integrator.
class GNumber {
public:
  explicit GNumber(std::size_t m = 0) : m_(m), c_(std::size_t(1) << m, Complex(0.0)) {}

  static GNumber scalar(std::size_t m, Complex z);
  static GNumber generator(std::size_t m, std::size_t j);

  std::size_t generators() const { return m_; }
  Complex& operator[](OddMask mask) { return c_[mask]; }
  const Complex& operator[](OddMask mask) const { return c_[mask]; }
  Complex body() const { return c_[0]; }

  GNumber& operator+=(const GNumber& o);
  GNumber& operator-=(const GNumber& o);
  GNumber operator+(const GNumber& o) const;
  GNumber operator-(const GNumber& o) const;
  GNumber operator*(const GNumber& o) const;
  GNumber scaled(Complex z) const;

  GNumber partial_odd(std::size_t j) const; // left derivative

  double norm() const;    // max coefficient magnitude
  bool finite() const;

private:
  std::size_t m_;
  std::vector<Complex> c_;
};

// Evaluation of an exact superfunction at a numeric superpoint: x_i and
// eta_j are replaced by the given Grassmann numbers (even/odd respectively
// in intended use; nothing is checked here).
GNumber eval_at(const GrassmannPoly& f, const std::vector<GNumber>& coords);

} // namespace supercalc

#endif
