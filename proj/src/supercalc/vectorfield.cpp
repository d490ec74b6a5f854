#include "supercalc/vectorfield.hpp"

#include <stdexcept>

namespace supercalc {

SuperVectorField::SuperVectorField(std::size_t n_even, std::size_t n_odd, Parity parity)
    : n_even_(n_even), n_odd_(n_odd), parity_(parity),
      coeffs_(n_even + n_odd, GrassmannPoly(n_even, n_odd)) {}

SuperVectorField::SuperVectorField(std::size_t n_even, std::size_t n_odd, Parity parity,
                                   std::vector<GrassmannPoly> coeffs)
    : n_even_(n_even), n_odd_(n_odd), parity_(parity), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != n_even_ + n_odd_)
    throw std::invalid_argument("SuperVectorField: one coefficient per coordinate required");
  for (std::size_t c = 0; c < coeffs_.size(); ++c) validate(c);
}

void SuperVectorField::validate(std::size_t coord) const {
  const GrassmannPoly& c = coeffs_[coord];
  if (c.n_even() != n_even_ || c.n_odd() != n_odd_)
    throw std::invalid_argument("SuperVectorField: coefficient domain mismatch");
  Parity want = coord < n_even_ ? parity_ : parity_ + Parity::Odd;
  if (!c.has_parity(want))
    throw gsalg::ParityError("SuperVectorField: coefficient parity violates homogeneity");
}

SuperVectorField SuperVectorField::d_coord(std::size_t n_even, std::size_t n_odd,
                                           std::size_t coord) {
  Parity p = coord < n_even ? Parity::Even : Parity::Odd;
  SuperVectorField x(n_even, n_odd, p);
  x.coeffs_[coord] = GrassmannPoly::constant(n_even, n_odd, GaussianRational(1));
  return x;
}

void SuperVectorField::set_coeff(std::size_t coord, GrassmannPoly c) {
  coeffs_[coord] = std::move(c);
  validate(coord);
}

bool SuperVectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

GrassmannPoly SuperVectorField::apply(const GrassmannPoly& f) const {
  if (f.n_even() != n_even_ || f.n_odd() != n_odd_)
    throw std::invalid_argument("SuperVectorField::apply: domain mismatch");
  GrassmannPoly acc(n_even_, n_odd_);
  for (std::size_t c = 0; c < coeffs_.size(); ++c) {
    if (coeffs_[c].is_zero()) continue;
    acc = acc + coeffs_[c] * f.partial(c);
  }
  return acc;
}

SuperVectorField SuperVectorField::operator+(const SuperVectorField& o) const {
  if (n_even_ != o.n_even_ || n_odd_ != o.n_odd_ || parity_ != o.parity_)
    throw std::invalid_argument("SuperVectorField: sum of incompatible fields");
  std::vector<GrassmannPoly> cs;
  for (std::size_t c = 0; c < coeffs_.size(); ++c) cs.push_back(coeffs_[c] + o.coeffs_[c]);
  return SuperVectorField(n_even_, n_odd_, parity_, std::move(cs));
}

SuperVectorField SuperVectorField::scaled(const GaussianRational& c) const {
  std::vector<GrassmannPoly> cs;
  for (const auto& g : coeffs_) cs.push_back(g.scaled(c));
  return SuperVectorField(n_even_, n_odd_, parity_, std::move(cs));
}

std::string SuperVectorField::str() const {
  std::string out;
  for (std::size_t c = 0; c < coeffs_.size(); ++c) {
    if (coeffs_[c].is_zero()) continue;
    std::string slot =
        c < n_even_ ? "x" + std::to_string(c + 1) : "th" + std::to_string(c - n_even_ + 1);
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[c].str() + ")*D[" + slot + "]";
  }
  return out.empty() ? "0" : out;
}

SuperVectorField vf_bracket(const SuperVectorField& x, const SuperVectorField& y) {
  if (x.n_even() != y.n_even() || x.n_odd() != y.n_odd())
    throw std::invalid_argument("vf_bracket: domain mismatch");
  const int sign = gsalg::koszul(x.parity(), y.parity());
  std::vector<GrassmannPoly> cs;
  for (std::size_t c = 0; c < x.n_coords(); ++c) {
    GrassmannPoly term = x.apply(y.coeff(c));
    GrassmannPoly other = y.apply(x.coeff(c));
    cs.push_back(sign < 0 ? term + other : term - other);
  }
  return SuperVectorField(x.n_even(), x.n_odd(), x.parity() + y.parity(), std::move(cs));
}

bool is_even_real_vf(const SuperVectorField& x) {
  if (x.parity() != Parity::Even) return false;
  for (std::size_t i = 0; i < x.n_even(); ++i)
    if (!x.coeff(i).is_real_function()) return false;
  return true;
}

} // namespace supercalc
