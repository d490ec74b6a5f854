#include "gsalg/mixed.hpp"

namespace gsalg {

namespace {

Vec unit(std::size_t n, std::size_t k) {
  Vec e(n);
  e[k] = GaussianRational(1);
  return e;
}

Vec unit_i(std::size_t n, std::size_t k) {
  Vec e(n);
  e[k] = GaussianRational::i();
  return e;
}

} // namespace

MixedData MixedData::mixed(GradedDim ambient, std::vector<Vec> realgen, std::vector<Vec> cplxgen) {
  const std::size_t n = ambient.total();
  for (std::size_t k = ambient.even; k < n; ++k) {
    realgen.push_back(unit(n, k));
    realgen.push_back(unit_i(n, k));
    cplxgen.push_back(unit(n, k));
  }
  return general(ambient, std::move(realgen), std::move(cplxgen));
}

MixedData MixedData::model(GradedDim ambient, std::size_t n1, std::size_t n2) {
  if (n1 + n2 != ambient.even)
    throw std::invalid_argument("MixedData::model: n1 + n2 must equal the even dimension");
  const std::size_t n = ambient.total();
  std::vector<Vec> realgen, cplxgen;
  for (std::size_t k = 0; k < n1; ++k) realgen.push_back(unit(n, k));
  for (std::size_t k = n1; k < n1 + n2; ++k) {
    realgen.push_back(unit(n, k));
    realgen.push_back(unit_i(n, k));
    cplxgen.push_back(unit(n, k));
  }
  return mixed(ambient, std::move(realgen), std::move(cplxgen));
}

MixedData MixedData::complex_space(GradedDim ambient) {
  const std::size_t n = ambient.total();
  std::vector<Vec> realgen, cplxgen;
  for (std::size_t k = 0; k < ambient.even; ++k) {
    realgen.push_back(unit(n, k));
    realgen.push_back(unit_i(n, k));
    cplxgen.push_back(unit(n, k));
  }
  return mixed(ambient, std::move(realgen), std::move(cplxgen));
}

MixedData MixedData::general(GradedDim ambient, std::vector<Vec> realgen, std::vector<Vec> cplxgen) {
  AmbientLayout layout = AmbientLayout::model(ambient);
  GradedSubspace vr = real_span(layout, realgen);
  // C-span: each complex generator contributes v and iv really.
  std::vector<Vec> cc;
  for (const Vec& v : cplxgen) {
    cc.push_back(v);
    Vec iv(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) iv[k] = GaussianRational::i() * v[k];
    cc.push_back(std::move(iv));
  }
  GradedSubspace vc = real_span(layout, cc);
  return MixedData(ambient, std::move(vr), std::move(vc));
}

MixedCheckResult check_mixed(const MixedData& d) {
  const GradedSubspace& vr = d.real_part();
  const GradedSubspace& vc = d.complex_part();

  if (!vr.contains(vc))
    return {false, "containment: V_C is not contained in V_R"};
  if (mul_i(vc) != vc)
    return {false, "i-invariance: V_C is not closed under multiplication by i"};

  GradedSubspace ivr = mul_i(vr);
  GradedSubspace total = sum(vr, ivr);
  if (total.dim().total() != vr.layout().size())
    return {false, "span: V_R + i*V_R is not all of V"};
  if (intersect(vr, ivr) != vc)
    return {false, "intersection: V_R cap i*V_R differs from V_C"};
  return {true, ""};
}

GradedSubspace induced_complex_part(const GradedSubspace& vr) {
  return intersect(vr, mul_i(vr));
}

} // namespace gsalg
