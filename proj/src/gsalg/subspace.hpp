#ifndef GSALG_SUBSPACE_HPP
#define GSALG_SUBSPACE_HPP

#include "gsalg/graded.hpp"
#include "gsalg/matrix.hpp"

#include <optional>

namespace gsalg {

// Sub super vector space in canonical form: the even and odd basis lists are
// each in reduced row echelon form over the fixed slot order, so two
// subspaces are equal iff their stored bases are equal.
class GradedSubspace {
public:
  GradedSubspace() = default;

  static GradedSubspace zero(AmbientLayout layout) { return GradedSubspace(std::move(layout)); }
  static GradedSubspace full(AmbientLayout layout);
  // Echelonizes a spanning set.  Throws ParityError on a vector with mixed
  // parity support.
  static GradedSubspace span(AmbientLayout layout, const std::vector<Vec>& vectors);

  const AmbientLayout& layout() const { return layout_; }
  GradedDim dim() const { return {basis_even_.size(), basis_odd_.size()}; }

  const std::vector<Vec>& basis_even() const { return basis_even_; }
  const std::vector<Vec>& basis_odd() const { return basis_odd_; }
  std::vector<Vec> basis() const; // even first, then odd
  std::vector<Parity> basis_parities() const;

  bool contains(const Vec& v) const;
  bool contains(const GradedSubspace& other) const;

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.layout_ == b.layout_ && a.basis_even_ == b.basis_even_ && a.basis_odd_ == b.basis_odd_;
  }
  friend bool operator!=(const GradedSubspace& a, const GradedSubspace& b) { return !(a == b); }

private:
  explicit GradedSubspace(AmbientLayout layout) : layout_(std::move(layout)) {}

  AmbientLayout layout_;
  std::vector<Vec> basis_even_, basis_odd_;
};

// Parity of a vector's support in the given layout; nullopt for the zero
// vector.  Throws ParityError if the support mixes parities.
std::optional<Parity> vector_parity(const AmbientLayout& layout, const Vec& v);

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);

// Kernel of a matrix whose columns carry the given layout.  Rows need no
// tags: the system is solved per column parity so the basis is homogeneous.
GradedSubspace kernel(const Matrix& m, const AmbientLayout& columns);

// --- real / complex interplay -------------------------------------------
//
// A complex vector v in layout L corresponds to the real vector
// (Re v_0, Im v_0, Re v_1, ...) in L.realify().  Real subspaces of a complex
// ambient space are always stored this way.

Vec realify_vec(const Vec& v);
Vec complexify_vec(const Vec& v); // inverse of realify_vec
Vec mul_i_vec(const Vec& v);      // (re, im) -> (-im, re) per complex slot

// R-span of the realifications of the given complex vectors.
GradedSubspace real_span(const AmbientLayout& complex_layout, const std::vector<Vec>& vectors);

// Realification of a complex subspace: each basis vector contributes v and iv.
GradedSubspace realify(const GradedSubspace& s);

// i * S for a real subspace of a realified ambient.
GradedSubspace mul_i(const GradedSubspace& s);

// Complex subspace underlying an i-invariant real subspace.  Throws
// std::invalid_argument if s is not i-invariant.
GradedSubspace complexify(const GradedSubspace& s, const AmbientLayout& complex_layout);

} // namespace gsalg

#endif
