#include "liesuper/gl_element.hpp"

#include "gsalg/subspace.hpp"

#include <stdexcept>

namespace liesuper {

namespace {

Parity slot_parity(const GradedDim& d, std::size_t k) {
  return k < d.even ? Parity::Even : Parity::Odd;
}

} // namespace

GlElement::GlElement(GradedDim ambient, Parity parity, Matrix m)
    : ambient_(ambient), parity_(parity), matrix_(std::move(m)) {
  const std::size_t n = ambient_.total();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw std::invalid_argument("GlElement: matrix size does not match ambient");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (matrix_.at(r, c).is_zero()) continue;
      Parity entry = slot_parity(ambient_, r) + slot_parity(ambient_, c);
      if (entry != parity_)
        throw gsalg::ParityError("GlElement: block structure does not match parity tag");
    }
}

Vec GlElement::flat() const {
  const std::size_t n = ambient_.total();
  Vec v(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t beta = 0; beta < n; ++beta) v[j * n + beta] = matrix_.at(beta, j);
  return v;
}

GlElement GlElement::from_flat(GradedDim ambient, const Vec& v) {
  const std::size_t n = ambient.total();
  if (v.size() != n * n) throw std::invalid_argument("GlElement::from_flat: wrong length");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t beta = 0; beta < n; ++beta) m.at(beta, j) = v[j * n + beta];
  auto p = gsalg::vector_parity(gl_layout(ambient), v);
  return GlElement(ambient, p.value_or(Parity::Even), std::move(m));
}

AmbientLayout GlElement::gl_layout(GradedDim ambient) {
  AmbientLayout v = AmbientLayout::model(ambient);
  return AmbientLayout::hom(v, v.slots);
}

GlElement bracket(const GlElement& a, const GlElement& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("bracket: ambient mismatch");
  Matrix ab = a.matrix() * b.matrix();
  Matrix ba = b.matrix() * a.matrix();
  Matrix m = gsalg::koszul(a.parity(), b.parity()) < 0 ? ab + ba : ab - ba;
  return GlElement(a.ambient(), a.parity() + b.parity(), std::move(m));
}

GlElement gl_add(const GlElement& a, const GlElement& b) {
  if (a.ambient() != b.ambient() || a.parity() != b.parity())
    throw std::invalid_argument("gl_add: mismatch");
  return GlElement(a.ambient(), a.parity(), a.matrix() + b.matrix());
}

GlElement gl_scale(const GaussianRational& c, const GlElement& a) {
  return GlElement(a.ambient(), a.parity(), a.matrix().scaled(c));
}

} // namespace liesuper
