#ifndef GSALG_MIXED_HPP
#define GSALG_MIXED_HPP

#include "gsalg/subspace.hpp"

#include <string>

namespace gsalg {

// The triple (V, V_R, V_C): a real and a complex subspace of a complex
// graded ambient, stored in realified coordinates.  The standard
// constructor enforces that the odd parts of V_R and V_C are all of V_odd;
// the `general` constructor skips that, which covers the real-category
// degenerate case (V, V_R, 0).
class MixedData {
public:
  // realgen: elements of V whose R-span (plus the odd enforcement) is V_R.
  // cplxgen: elements of V whose C-span (plus odd enforcement) is V_C.
  static MixedData mixed(GradedDim ambient, std::vector<Vec> realgen, std::vector<Vec> cplxgen);

  // Model space: even part R^{n1} x C^{n2} inside C^{n1+n2}, V_C even part
  // the C^{n2} factor.  Requires n1 + n2 == ambient.even.
  static MixedData model(GradedDim ambient, std::size_t n1, std::size_t n2);

  // Extreme case V_R = V_C = V (complex super vector space).
  static MixedData complex_space(GradedDim ambient);

  // No odd-part enforcement; V_C from cplxgen as given (may be empty).
  static MixedData general(GradedDim ambient, std::vector<Vec> realgen, std::vector<Vec> cplxgen);

  // Wraps already-realified subspaces of the ambient; no enforcement.
  static MixedData from_parts(GradedDim ambient, GradedSubspace vr, GradedSubspace vc) {
    return MixedData(ambient, std::move(vr), std::move(vc));
  }

  GradedDim ambient() const { return ambient_; }
  const AmbientLayout& complex_layout() const { return layout_; }
  const GradedSubspace& real_part() const { return vr_; }    // realified coords
  const GradedSubspace& complex_part() const { return vc_; } // realified coords

private:
  MixedData(GradedDim ambient, GradedSubspace vr, GradedSubspace vc)
      : ambient_(ambient), layout_(AmbientLayout::model(ambient)), vr_(std::move(vr)),
        vc_(std::move(vc)) {}

  GradedDim ambient_;
  AmbientLayout layout_;
  GradedSubspace vr_, vc_;
};

struct MixedCheckResult {
  bool valid = false;
  std::string violation; // names the first failing condition
};

// Validity of the triple via V_R + i V_R = V and V_R cap i V_R = V_C,
// together with V_C contained in V_R and i-invariance of V_C.
MixedCheckResult check_mixed(const MixedData& d);

// V_R cap i V_R: the maximal complex subspace of V_R (still in realified
// coordinates; i-invariant by construction).
GradedSubspace induced_complex_part(const GradedSubspace& vr);

} // namespace gsalg

#endif
