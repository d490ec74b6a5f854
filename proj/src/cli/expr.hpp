#ifndef SPCLI_EXPR_HPP
#define SPCLI_EXPR_HPP

#include "supercalc/vectorfield.hpp"

#include <stdexcept>
#include <string>

namespace spcli {

// Expression language for superfunctions and vector fields on R^{n|m}:
// identifiers x1..xn and th1..thm, rational literals "a" / "a/b", the
// imaginary unit "i", operators + - * ^, and D[x1] / D[th2] in vector-field
// position.  Multiplication binds coefficients to D-terms from the left.

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("at position " + std::to_string(pos) + ": " + what), position(pos) {}
  std::size_t position;
};

struct ExprValue {
  bool is_field = false;
  supercalc::GrassmannPoly fn;                        // when !is_field
  std::vector<supercalc::GrassmannPoly> field_coeffs; // per coordinate, when is_field
};

ExprValue parse_expression(const std::string& src, std::size_t n_even, std::size_t n_odd);

// Typed fronts; these throw ParseError on a value of the wrong kind or on a
// parity-inhomogeneous field.
supercalc::GrassmannPoly parse_superfunction(const std::string& src, std::size_t n_even,
                                             std::size_t n_odd);
supercalc::SuperVectorField parse_vector_field(const std::string& src, std::size_t n_even,
                                               std::size_t n_odd);

} // namespace spcli

#endif
