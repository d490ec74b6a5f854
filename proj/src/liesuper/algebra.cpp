#include "liesuper/algebra.hpp"

#include <stdexcept>

namespace liesuper {

SuperAlgebraBasis::SuperAlgebraBasis(GradedDim ambient, const std::vector<GlElement>& elements)
    : ambient_(ambient) {
  std::vector<Vec> flats;
  flats.reserve(elements.size());
  for (const GlElement& e : elements) {
    if (e.ambient() != ambient_) throw std::invalid_argument("SuperAlgebraBasis: ambient mismatch");
    flats.push_back(e.flat());
  }
  span_ = GradedSubspace::span(GlElement::gl_layout(ambient_), flats);
  for (const Vec& v : span_.basis()) elements_.push_back(GlElement::from_flat(ambient_, v));
}

SuperAlgebraBasis SuperAlgebraBasis::gl(GradedDim ambient) {
  const std::size_t n = ambient.total();
  std::vector<GlElement> elems;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Matrix m(n, n);
      m.at(r, c) = GaussianRational(1);
      Parity p = (r < ambient.even ? Parity::Even : Parity::Odd) +
                 (c < ambient.even ? Parity::Even : Parity::Odd);
      elems.emplace_back(ambient, p, std::move(m));
    }
  return SuperAlgebraBasis(ambient, elems);
}

SuperAlgebraBasis SuperAlgebraBasis::zero(GradedDim ambient) {
  return SuperAlgebraBasis(ambient, {});
}

std::vector<GlElement> SuperAlgebraBasis::even_elements() const {
  std::vector<GlElement> out;
  for (const GlElement& e : elements_)
    if (e.parity() == Parity::Even) out.push_back(e);
  return out;
}

std::vector<GlElement> SuperAlgebraBasis::odd_elements() const {
  std::vector<GlElement> out;
  for (const GlElement& e : elements_)
    if (e.parity() == Parity::Odd) out.push_back(e);
  return out;
}

bool is_subalgebra(const SuperAlgebraBasis& s) {
  const auto& elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      if (!s.contains(bracket(elems[i], elems[j]))) return false;
  return true;
}

SuperAlgebraBasis generate_subalgebra(GradedDim ambient, std::vector<GlElement> elements) {
  SuperAlgebraBasis current(ambient, elements);
  // dim is bounded by dim gl(V), so this terminates.
  for (;;) {
    std::vector<GlElement> next = current.elements();
    bool grew = false;
    const auto& elems = current.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i; j < elems.size(); ++j) {
        GlElement br = bracket(elems[i], elems[j]);
        if (!br.is_zero() && !current.contains(br)) {
          next.push_back(br);
          grew = true;
        }
      }
    if (!grew) return current;
    current = SuperAlgebraBasis(ambient, next);
  }
}

SuperAlgebraBasis conjugate(const SuperAlgebraBasis& g, const Matrix& t) {
  Matrix tinv = gsalg::inverse(t);
  std::vector<GlElement> elems;
  for (const GlElement& e : g.elements())
    elems.emplace_back(g.ambient(), e.parity(), tinv * e.matrix() * t);
  return SuperAlgebraBasis(g.ambient(), elems);
}

} // namespace liesuper
