#ifndef LIESUPER_ALGEBRA_HPP
#define LIESUPER_ALGEBRA_HPP

#include "gsalg/subspace.hpp"
#include "liesuper/gl_element.hpp"

namespace liesuper {

using gsalg::GradedSubspace;

// Subalgebra of gl(V) given by an echelonized basis of homogeneous matrices.
class SuperAlgebraBasis {
public:
  SuperAlgebraBasis(GradedDim ambient, const std::vector<GlElement>& elements);

  static SuperAlgebraBasis gl(GradedDim ambient); // all of gl(V)
  static SuperAlgebraBasis zero(GradedDim ambient);

  GradedDim ambient() const { return ambient_; }
  GradedDim dim() const { return span_.dim(); }
  const GradedSubspace& span() const { return span_; }

  // Echelon basis, even elements first.
  const std::vector<GlElement>& elements() const { return elements_; }
  std::vector<GlElement> even_elements() const;
  std::vector<GlElement> odd_elements() const;

  bool contains(const GlElement& x) const { return span_.contains(x.flat()); }

  friend bool operator==(const SuperAlgebraBasis& a, const SuperAlgebraBasis& b) {
    return a.ambient_ == b.ambient_ && a.span_ == b.span_;
  }

private:
  GradedDim ambient_;
  GradedSubspace span_;               // subspace of flattened gl(V)
  std::vector<GlElement> elements_;   // unflattened echelon basis
};

bool is_subalgebra(const SuperAlgebraBasis& s);

// Smallest bracket-closed span containing the given elements.
SuperAlgebraBasis generate_subalgebra(GradedDim ambient, std::vector<GlElement> elements);

// A conjugate T^{-1} g T of the algebra by an invertible even map.
SuperAlgebraBasis conjugate(const SuperAlgebraBasis& g, const Matrix& t);

} // namespace liesuper

#endif
