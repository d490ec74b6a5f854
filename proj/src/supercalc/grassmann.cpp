#include "supercalc/grassmann.hpp"

#include <bit>
#include <stdexcept>

namespace supercalc {

int mask_sign(OddMask left, OddMask right) {
  if (left & right) return 0;
  // count transpositions: for each generator in `right`, the generators of
  // `left` above it must be crossed
  int crossings = 0;
  for (OddMask r = right; r; r &= r - 1) {
    int j = std::countr_zero(r);
    crossings += std::popcount(left >> (j + 1));
  }
  return crossings % 2 ? -1 : 1;
}

GrassmannPoly GrassmannPoly::constant(std::size_t n_even, std::size_t n_odd,
                                      const GaussianRational& c) {
  GrassmannPoly g(n_even, n_odd);
  g.add_term(0, Poly::constant(n_even, c));
  return g;
}

GrassmannPoly GrassmannPoly::coordinate(std::size_t n_even, std::size_t n_odd, std::size_t k) {
  if (k < n_even) {
    GrassmannPoly g(n_even, n_odd);
    g.add_term(0, Poly::variable(n_even, k));
    return g;
  }
  return eta(n_even, n_odd, k - n_even);
}

GrassmannPoly GrassmannPoly::eta(std::size_t n_even, std::size_t n_odd, std::size_t j) {
  if (j >= n_odd) throw std::invalid_argument("GrassmannPoly::eta: index out of range");
  GrassmannPoly g(n_even, n_odd);
  g.add_term(OddMask(1) << j, Poly::constant(n_even, GaussianRational(1)));
  return g;
}

GrassmannPoly GrassmannPoly::from_poly(std::size_t n_odd, OddMask mask, Poly p) {
  GrassmannPoly g(p.nvars(), n_odd);
  g.add_term(mask, p);
  return g;
}

void GrassmannPoly::add_term(OddMask mask, const Poly& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, p);
  } else {
    Poly s = it->second + p;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

GrassmannPoly GrassmannPoly::operator+(const GrassmannPoly& o) const {
  if (n_even_ != o.n_even_ || n_odd_ != o.n_odd_)
    throw std::invalid_argument("GrassmannPoly: domain mismatch");
  GrassmannPoly r = *this;
  for (const auto& [m, p] : o.terms_) r.add_term(m, p);
  return r;
}

GrassmannPoly GrassmannPoly::operator-(const GrassmannPoly& o) const {
  return *this + o.scaled(GaussianRational(-1));
}

GrassmannPoly GrassmannPoly::operator*(const GrassmannPoly& o) const {
  if (n_even_ != o.n_even_ || n_odd_ != o.n_odd_)
    throw std::invalid_argument("GrassmannPoly: domain mismatch");
  GrassmannPoly r(n_even_, n_odd_);
  for (const auto& [ma, pa] : terms_)
    for (const auto& [mb, pb] : o.terms_) {
      int s = mask_sign(ma, mb);
      if (s == 0) continue;
      Poly prod = pa * pb;
      if (s < 0) prod = prod.scaled(GaussianRational(-1));
      r.add_term(ma | mb, prod);
    }
  return r;
}

GrassmannPoly GrassmannPoly::scaled(const GaussianRational& c) const {
  GrassmannPoly r(n_even_, n_odd_);
  if (c.is_zero()) return r;
  for (const auto& [m, p] : terms_) r.add_term(m, p.scaled(c));
  return r;
}

GrassmannPoly GrassmannPoly::partial_even(std::size_t i) const {
  GrassmannPoly r(n_even_, n_odd_);
  for (const auto& [m, p] : terms_) r.add_term(m, p.derivative(i));
  return r;
}

GrassmannPoly GrassmannPoly::partial_odd(std::size_t j) const {
  if (j >= n_odd_) throw std::invalid_argument("GrassmannPoly::partial_odd: index out of range");
  GrassmannPoly r(n_even_, n_odd_);
  const OddMask bit = OddMask(1) << j;
  for (const auto& [m, p] : terms_) {
    if (!(m & bit)) continue;
    // left derivative: move eta_j to the front, one sign per lower generator
    int lower = std::popcount(m & (bit - 1));
    r.add_term(m & ~bit, lower % 2 ? p.scaled(GaussianRational(-1)) : p);
  }
  return r;
}

GrassmannPoly GrassmannPoly::partial(std::size_t coord) const {
  return coord < n_even_ ? partial_even(coord) : partial_odd(coord - n_even_);
}

Poly GrassmannPoly::body() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Poly(n_even_) : it->second;
}

bool GrassmannPoly::is_real_function() const {
  const Poly b = body();
  for (const auto& [e, c] : b.terms())
    if (!c.is_real()) return false;
  return true;
}

std::optional<Parity> GrassmannPoly::parity() const {
  std::optional<Parity> p;
  for (const auto& [m, poly] : terms_) {
    Parity tp = std::popcount(m) % 2 ? Parity::Odd : Parity::Even;
    if (!p)
      p = tp;
    else if (*p != tp)
      return std::nullopt;
  }
  return p ? p : std::optional<Parity>(Parity::Even);
}

bool GrassmannPoly::has_parity(Parity p) const {
  for (const auto& [m, poly] : terms_)
    if ((std::popcount(m) % 2 ? Parity::Odd : Parity::Even) != p) return false;
  return true;
}

unsigned GrassmannPoly::x_degree() const {
  unsigned d = 0;
  for (const auto& [m, p] : terms_) d = std::max(d, p.degree());
  return d;
}

GrassmannPoly GrassmannPoly::substitute(const std::vector<GrassmannPoly>& images) const {
  if (images.size() != n_even_ + n_odd_)
    throw std::invalid_argument("GrassmannPoly::substitute: needs one image per coordinate");
  if (images.empty()) return *this;
  const std::size_t tn = images[0].n_even(), tm = images[0].n_odd();
  GrassmannPoly acc(tn, tm);
  for (const auto& [mask, poly] : terms_) {
    for (const auto& [expo, coeff] : poly.terms()) {
      GrassmannPoly term = GrassmannPoly::constant(tn, tm, coeff);
      for (std::size_t k = 0; k < n_even_; ++k)
        for (unsigned e = 0; e < expo[k]; ++e) term = term * images[k];
      for (OddMask m = mask; m; m &= m - 1) {
        int j = std::countr_zero(m);
        term = term * images[n_even_ + j];
      }
      acc = acc + term;
    }
  }
  return acc;
}

std::string GrassmannPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, poly] : terms_) {
    for (const auto& [expo, coeff] : poly.terms()) {
      std::string mono;
      for (std::size_t k = 0; k < n_even_; ++k) {
        if (expo[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(k + 1);
        if (expo[k] > 1) mono += "^" + std::to_string(expo[k]);
      }
      for (OddMask m = mask; m; m &= m - 1) {
        if (!mono.empty()) mono += "*";
        mono += "th" + std::to_string(std::countr_zero(m) + 1);
      }
      std::string cs = coeff.str();
      std::string term;
      if (mono.empty()) {
        term = cs.find_first_of("+-", 1) != std::string::npos ? "(" + cs + ")" : cs;
      } else if (coeff == GaussianRational(1)) {
        term = mono;
      } else if (coeff == GaussianRational(-1)) {
        term = "-" + mono;
      } else {
        bool needs_parens = cs.find_first_of("+-", 1) != std::string::npos;
        term = (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
      }
      if (first) {
        out = term;
        first = false;
      } else if (!term.empty() && term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
  }
  return out;
}

} // namespace supercalc
