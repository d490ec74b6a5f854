#ifndef SUPERCALC_POLY_HPP
#define SUPERCALC_POLY_HPP

#include "gsalg/gaussian_rational.hpp"

#include <map>
#include <vector>

namespace supercalc {

using gsalg::GaussianRational;

using Exponents = std::vector<unsigned>;

// Multivariate polynomial over Q(i) with a fixed variable count.
class Poly {
public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const GaussianRational& c);
  static Poly variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  const std::map<Exponents, GaussianRational>& terms() const { return terms_; }
  void add_term(const Exponents& e, const GaussianRational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const GaussianRational& c) const;
  Poly derivative(std::size_t k) const;

  GaussianRational eval(const std::vector<GaussianRational>& xs) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
  std::size_t nvars_;
  std::map<Exponents, GaussianRational> terms_; // no zero coefficients stored
};

} // namespace supercalc

#endif
