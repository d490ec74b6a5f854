#include "supercalc/gnumber.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace supercalc {

GNumber GNumber::scalar(std::size_t m, Complex z) {
  GNumber g(m);
  g.c_[0] = z;
  return g;
}

GNumber GNumber::generator(std::size_t m, std::size_t j) {
  if (j >= m) throw std::invalid_argument("GNumber::generator: index out of range");
  GNumber g(m);
  g.c_[std::size_t(1) << j] = 1.0;
  return g;
}

GNumber& GNumber::operator+=(const GNumber& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

GNumber& GNumber::operator-=(const GNumber& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

GNumber GNumber::operator+(const GNumber& o) const {
  GNumber r = *this;
  return r += o;
}

GNumber GNumber::operator-(const GNumber& o) const {
  GNumber r = *this;
  return r -= o;
}

GNumber GNumber::operator*(const GNumber& o) const {
  GNumber r(m_);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0.0) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) {
      if (o.c_[b] == 0.0) continue;
      int s = mask_sign(static_cast<OddMask>(a), static_cast<OddMask>(b));
      if (s == 0) continue;
      r.c_[a | b] += static_cast<double>(s) * c_[a] * o.c_[b];
    }
  }
  return r;
}

GNumber GNumber::scaled(Complex z) const {
  GNumber r = *this;
  for (auto& x : r.c_) x *= z;
  return r;
}

GNumber GNumber::partial_odd(std::size_t j) const {
  GNumber r(m_);
  const std::size_t bit = std::size_t(1) << j;
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (!(a & bit) || c_[a] == 0.0) continue;
    int lower = std::popcount(a & (bit - 1));
    r.c_[a & ~bit] = lower % 2 ? -c_[a] : c_[a];
  }
  return r;
}

double GNumber::norm() const {
  double m = 0.0;
  for (const auto& x : c_) m = std::max(m, std::abs(x));
  return m;
}

bool GNumber::finite() const {
  for (const auto& x : c_)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

GNumber eval_at(const GrassmannPoly& f, const std::vector<GNumber>& coords) {
  if (coords.size() != f.n_even() + f.n_odd())
    throw std::invalid_argument("eval_at: one value per coordinate required");
  const std::size_t m = coords.empty() ? 0 : coords[0].generators();
  GNumber acc(m);
  for (const auto& [mask, poly] : f.terms()) {
    for (const auto& [expo, coeff] : poly.terms()) {
      GNumber term = GNumber::scalar(m, Complex(coeff.re_d(), coeff.im_d()));
      for (std::size_t k = 0; k < f.n_even(); ++k)
        for (unsigned e = 0; e < expo[k]; ++e) term = term * coords[k];
      for (OddMask mm = mask; mm; mm &= mm - 1)
        term = term * coords[f.n_even() + std::countr_zero(mm)];
      acc += term;
    }
  }
  return acc;
}

} // namespace supercalc
