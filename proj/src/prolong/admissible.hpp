#ifndef PROLONG_ADMISSIBLE_HPP
#define PROLONG_ADMISSIBLE_HPP

#include "gsalg/mixed.hpp"
#include "prolong/tower.hpp"

namespace prolong {

using gsalg::MixedCheckResult;
using gsalg::MixedData;

// Real structure on the even part of a tower level: W_R = maps in
// (g^(k))_0 sending V_R into the level-(k-1) real part and V_C into its
// complex part; W_C is the recovered complex part W_R cap i W_R.  Both are
// real subspaces of the realification of C^{e_k}, coordinatized by the even
// echelon basis of g^(k).
struct LevelMixedStructure {
  GradedSubspace w_r;
  GradedSubspace w_c;
};

// The chain of level structures 0..k (level -1 is the even part of the
// supplied MixedData).  Throws std::invalid_argument on invalid MixedData.
std::vector<LevelMixedStructure> level_mixed_chain(ProlongationTower& t, const MixedData& mixed,
                                                   std::size_t k);

// (Hom(V, g^(k-1))_0)^mu_R intersected with (g^(k))_0.
GradedSubspace hom_mu_real(ProlongationTower& t, const MixedData& mixed, std::size_t k);

struct AdmissibilityLevel {
  GradedDim dim;                  // graded dim of g^(k)
  std::size_t real_even_dim = 0;  // dim_R W_R
  std::size_t complex_even_dim = 0; // dim_C W_C
  MixedCheckResult check;
};

struct AdmissibilityResult {
  enum class Verdict { Admissible, Inadmissible, Undecided } verdict;
  std::size_t failed_level = 0; // set when inadmissible
  std::vector<AdmissibilityLevel> levels;
  bool tower_vanished = false;

  std::string str() const {
    switch (verdict) {
    case Verdict::Admissible: return "admissible";
    case Verdict::Inadmissible: return "inadmissible(" + std::to_string(failed_level) + ")";
    default: return "undecided";
    }
  }
};

// Runs check_mixed on ((g^(k))_0, W_R, W_C) for each k until the tower
// vanishes or kmax is reached.  Zero levels are trivially mixed, so a
// vanishing tower ends the scan with a definite verdict.
AdmissibilityResult is_admissible(ProlongationTower& t, const MixedData& mixed, std::size_t kmax);

} // namespace prolong

#endif
