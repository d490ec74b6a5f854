#ifndef LIESUPER_GL_ELEMENT_HPP
#define LIESUPER_GL_ELEMENT_HPP

#include "gsalg/graded.hpp"
#include "gsalg/matrix.hpp"

namespace liesuper {

using gsalg::AmbientLayout;
using gsalg::GaussianRational;
using gsalg::GradedDim;
using gsalg::Matrix;
using gsalg::Parity;
using gsalg::Vec;

// Homogeneous element of gl(V) for V = C^{d.even | d.odd}.  Coordinates are
// ordered even block first; the block structure must match the parity tag
// (even: diagonal blocks, odd: off-diagonal blocks).
class GlElement {
public:
  GlElement(GradedDim ambient, Parity parity, Matrix m);

  GradedDim ambient() const { return ambient_; }
  Parity parity() const { return parity_; }
  const Matrix& matrix() const { return matrix_; }

  bool is_zero() const { return matrix_.is_zero(); }

  // Flattened Hom(V, V) coordinates, slot (j, beta) = entry (beta, j):
  // the beta-coordinate of the image of basis vector e_j.
  Vec flat() const;
  static GlElement from_flat(GradedDim ambient, const Vec& v);

  // Layout of the flattened gl(V) ambient space.
  static AmbientLayout gl_layout(GradedDim ambient);

private:
  GradedDim ambient_;
  Parity parity_;
  Matrix matrix_;
};

// Super commutator [A, B] = AB - (-1)^{|A||B|} BA.
GlElement bracket(const GlElement& a, const GlElement& b);

GlElement gl_add(const GlElement& a, const GlElement& b);
GlElement gl_scale(const GaussianRational& c, const GlElement& a);

} // namespace liesuper

#endif
