#include "supercalc/poly.hpp"

#include <stdexcept>

namespace supercalc {

Poly Poly::constant(std::size_t nvars, const GaussianRational& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[k] = 1;
  p.add_term(e, GaussianRational(1));
  return p;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (unsigned x : e) t += x;
    if (t > d) d = t;
  }
  return d;
}

void Poly::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(GaussianRational(-1)); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.add_term(e, t * c);
  return r;
}

Poly Poly::derivative(std::size_t k) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    r.add_term(d, c * GaussianRational(static_cast<long>(e[k])));
  }
  return r;
}

GaussianRational Poly::eval(const std::vector<GaussianRational>& xs) const {
  if (xs.size() != nvars_) throw std::invalid_argument("Poly::eval: point size mismatch");
  GaussianRational acc;
  for (const auto& [e, c] : terms_) {
    GaussianRational m = c;
    for (std::size_t k = 0; k < nvars_; ++k)
      for (unsigned p = 0; p < e[k]; ++p) m *= xs[k];
    acc += m;
  }
  return acc;
}

} // namespace supercalc
