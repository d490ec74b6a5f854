#ifndef PROLONG_TOWER_HPP
#define PROLONG_TOWER_HPP

#include "liesuper/algebra.hpp"

#include <optional>

namespace prolong {

using gsalg::AmbientLayout;
using gsalg::GaussianRational;
using gsalg::GradedDim;
using gsalg::GradedSubspace;
using gsalg::Matrix;
using gsalg::Parity;
using gsalg::Vec;
using liesuper::SuperAlgebraBasis;

// Index table for Lambda^2 V: pairs (a, b) with a < b, plus the diagonal
// pairs (a, a) for odd a (the symmetric square of the odd part).
struct PairTable {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Parity> parities; // |a| + |b|

  static PairTable build(const AmbientLayout& v);
};

// Coordinate layout of Hom(V, g) over the echelon basis of g.
AmbientLayout hom_layout(GradedDim v, const std::vector<Parity>& target_parities);

// Coordinate layout of Hom(Lambda^2 V, V).
AmbientLayout hom_lambda2_layout(GradedDim v);

// Matrix of the super-antisymmetrizer
//   (dS)(v, w) = 1/2 (S(v)(w) - (-1)^{|v||w|} S(w)(v))
// from Hom(V, g) to Hom(Lambda^2 V, V), in the layouts above.
Matrix antisymmetrizer_matrix(const SuperAlgebraBasis& g);

// dS for a single element of Hom(V, g).
Vec super_antisymmetrize(const SuperAlgebraBasis& g, const Vec& s);

// g^(1) as the kernel of the super-antisymmetrizer.
GradedSubspace first_prolongation(const SuperAlgebraBasis& g);

// dim coker(d) = dim Hom(Lambda^2 V, V) - rank d, graded.
GradedDim h02_dimension(const SuperAlgebraBasis& g);

// The tower g^(-1) = V, g^(0) = g, g^(k) in Hom(V, g^(k-1)).  Level k >= 1
// is computed from the inductive symmetry condition
//   X(v)(w) = (-1)^{|v||w|} X(w)(v),
// which for k = 1 gives a second, independent route to ker d.
class ProlongationTower {
public:
  explicit ProlongationTower(SuperAlgebraBasis g);

  const SuperAlgebraBasis& algebra() const { return g_; }
  GradedDim v_dim() const { return g_.ambient(); }

  const GradedSubspace& level(std::size_t k); // computes on demand, cached
  std::size_t computed() const { return levels_.size(); }

  // Evaluation of level-k basis element beta at V-basis index a, as
  // coordinates in level k-1 (k >= 1) or in V (k == 0).
  const Vec& eval(std::size_t k, std::size_t beta, std::size_t a) const;

  // Torsion obstruction at level k: coker of the level-k symmetry map
  // Hom(V, g^(k)) -> Hom(Lambda^2 V, g^(k-1)); level 0 equals
  // h02_dimension(g).
  GradedDim h02_at(std::size_t k);

private:
  void extend();

  SuperAlgebraBasis g_;
  PairTable table_;
  std::vector<GradedSubspace> levels_;    // levels_[k] = g^(k)
  std::vector<std::vector<std::vector<Vec>>> ev_; // ev_[k][beta][a]
  std::vector<GradedDim> h02_;            // parallel to levels_
};

struct FiniteTypeResult {
  bool finite = false;
  std::size_t k = 0;    // minimal k with g^(k) = 0 when finite
  std::size_t kmax = 0; // cap used when undecided
  std::string str() const {
    return finite ? "finite(" + std::to_string(k) + ")" : "undecided(" + std::to_string(kmax) + ")";
  }
};

// Never claims infinite type: reports finite(k) or undecided(kmax).
FiniteTypeResult finite_type(ProlongationTower& t, std::size_t kmax);

} // namespace prolong

#endif
