#ifndef SUPERCALC_GRASSMANN_HPP
#define SUPERCALC_GRASSMANN_HPP

#include "gsalg/graded.hpp"
#include "supercalc/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace supercalc {

using gsalg::Parity;

using OddMask = std::uint32_t; // bit j = generator eta_{j+1}

int mask_sign(OddMask left, OddMask right); // 0 if they overlap, else +-1

// Superfunction on a polynomial superdomain R^{n|m}: a finite sum
// sum_I f_I(x) eta^I over strictly increasing odd multi-indices I, with
// exact coefficients.
class GrassmannPoly {
public:
  GrassmannPoly(std::size_t n_even = 0, std::size_t n_odd = 0)
      : n_even_(n_even), n_odd_(n_odd) {}

  static GrassmannPoly constant(std::size_t n_even, std::size_t n_odd, const GaussianRational& c);
  static GrassmannPoly coordinate(std::size_t n_even, std::size_t n_odd, std::size_t k);
  static GrassmannPoly eta(std::size_t n_even, std::size_t n_odd, std::size_t j);
  static GrassmannPoly from_poly(std::size_t n_odd, OddMask mask, Poly p);

  std::size_t n_even() const { return n_even_; }
  std::size_t n_odd() const { return n_odd_; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<OddMask, Poly>& terms() const { return terms_; }
  void add_term(OddMask mask, const Poly& p);

  GrassmannPoly operator+(const GrassmannPoly& o) const;
  GrassmannPoly operator-(const GrassmannPoly& o) const;
  GrassmannPoly operator*(const GrassmannPoly& o) const;
  GrassmannPoly scaled(const GaussianRational& c) const;

  // Left derivatives; coord indexes x for k < n_even, eta otherwise.
  GrassmannPoly partial_even(std::size_t i) const;
  GrassmannPoly partial_odd(std::size_t j) const;
  GrassmannPoly partial(std::size_t coord) const;

  Poly body() const; // the I = {} term
  bool is_real_function() const;

  // Parity when every term has the same |I| mod 2 (zero counts as both).
  std::optional<Parity> parity() const;
  bool has_parity(Parity p) const;

  unsigned x_degree() const;

  // Substitution q_k -> images[k]; images live in a common target algebra.
  GrassmannPoly substitute(const std::vector<GrassmannPoly>& images) const;

  // Canonical printable form, reparseable by the CLI expression parser.
  std::string str() const;

  friend bool operator==(const GrassmannPoly& a, const GrassmannPoly& b) {
    return a.n_even_ == b.n_even_ && a.n_odd_ == b.n_odd_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GrassmannPoly& a, const GrassmannPoly& b) { return !(a == b); }

private:
  std::size_t n_even_, n_odd_;
  std::map<OddMask, Poly> terms_; // no zero polynomials stored
};

} // namespace supercalc

#endif
