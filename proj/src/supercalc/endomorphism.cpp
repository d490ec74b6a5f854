#include "supercalc/endomorphism.hpp"

#include <bit>
#include <stdexcept>

namespace supercalc {

namespace {

using gsalg::GaussianRational;
using gsalg::Parity;

GrassmannPoly shift_odd(const GrassmannPoly& g, std::size_t shift, std::size_t new_n_odd) {
  GrassmannPoly out(g.n_even(), new_n_odd);
  for (const auto& [mask, poly] : g.terms()) out.add_term(mask << shift, poly);
  return out;
}

// determinant of a square Poly matrix by cofactor expansion (small sizes)
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(0, GaussianRational(1));
  if (n == 1) return m[0][0];
  Poly acc(m[0][0].nvars());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * poly_det(minor);
    acc = c % 2 ? acc - term : acc + term;
  }
  return acc;
}

} // namespace

SuperDomainMap::SuperDomainMap(std::size_t n_even, std::size_t n_odd,
                               std::vector<GrassmannPoly> components)
    : n_even_(n_even), n_odd_(n_odd), components_(std::move(components)) {
  if (components_.size() != n_even_ + n_odd_)
    throw std::invalid_argument("SuperDomainMap: one component per coordinate required");
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (components_[c].n_even() != n_even_ || components_[c].n_odd() != n_odd_)
      throw std::invalid_argument("SuperDomainMap: component domain mismatch");
    Parity want = c < n_even_ ? Parity::Even : Parity::Odd;
    if (!components_[c].has_parity(want))
      throw gsalg::ParityError("SuperDomainMap: component parity does not match its coordinate");
  }
}

SuperDomainMap SuperDomainMap::identity(std::size_t n_even, std::size_t n_odd) {
  std::vector<GrassmannPoly> comps;
  for (std::size_t c = 0; c < n_even + n_odd; ++c)
    comps.push_back(GrassmannPoly::coordinate(n_even, n_odd, c));
  return SuperDomainMap(n_even, n_odd, std::move(comps));
}

GMatrix gm_identity(std::size_t n_even, std::size_t n_odd, std::size_t size) {
  GMatrix m(size, std::vector<GrassmannPoly>(size, GrassmannPoly(n_even, n_odd)));
  for (std::size_t k = 0; k < size; ++k)
    m[k][k] = GrassmannPoly::constant(n_even, n_odd, GaussianRational(1));
  return m;
}

GMatrix gm_mul(const GMatrix& a, const GMatrix& b) {
  const std::size_t n = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  GMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("gm_mul: shape mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      GrassmannPoly acc(a[i][0].n_even(), a[i][0].n_odd());
      for (std::size_t k = 0; k < inner; ++k) {
        if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
        acc = acc + a[i][k] * b[k][j];
      }
      r[i].push_back(std::move(acc));
    }
  }
  return r;
}

GMatrix gm_pullback(const SuperDomainMap& f, const GMatrix& a) {
  GMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& e : a[i]) r[i].push_back(f.pullback(e));
  return r;
}

GMatrix jacobian(const SuperDomainMap& f) {
  const std::size_t nm = f.n_even() + f.n_odd();
  GMatrix j(nm, std::vector<GrassmannPoly>(nm, GrassmannPoly(f.n_even(), f.n_odd())));
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t c = 0; c < nm; ++c) j[i][c] = f.component(c).partial(i);
  return j;
}

GMatrix gm_inverse(const GMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return a;
  const std::size_t ne = a[0][0].n_even(), no = a[0][0].n_odd();

  // body block: the eta-free part (a polynomial matrix)
  std::vector<std::vector<Poly>> body(n, std::vector<Poly>(n, Poly(ne)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) body[i][j] = a[i][j].body();

  Poly det = poly_det(body);
  if (det.is_zero() || det.degree() > 0)
    throw std::domain_error(
        "gm_inverse: body determinant is not a nonzero constant (map not invertible as a "
        "polynomial automorphism)");
  GaussianRational det_c = det.terms().begin()->second;

  // adjugate over the polynomial ring
  GMatrix binv(n, std::vector<GrassmannPoly>(n, GrassmannPoly(ne, no)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Poly>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Poly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(body[r][c]);
        minor.push_back(std::move(row));
      }
      Poly cof = n == 1 ? Poly::constant(ne, GaussianRational(1)) : poly_det(minor);
      if ((i + j) % 2) cof = cof.scaled(GaussianRational(-1));
      binv[i][j] = GrassmannPoly::from_poly(no, 0, cof.scaled(GaussianRational(1) / det_c));
    }

  // nilpotent correction: a = B(1 + B^{-1} N), Neumann series terminates
  GMatrix nil(n, std::vector<GrassmannPoly>(n, GrassmannPoly(ne, no)));
  bool has_nil = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GrassmannPoly d = a[i][j] - GrassmannPoly::from_poly(no, 0, body[i][j]);
      if (!d.is_zero()) has_nil = true;
      nil[i][j] = std::move(d);
    }
  if (!has_nil) return binv;

  GMatrix p = gm_mul(binv, nil);
  GMatrix acc = gm_identity(ne, no, n);
  GMatrix power = gm_identity(ne, no, n);
  for (std::size_t k = 1; k <= no; ++k) {
    power = gm_mul(power, p);
    bool zero = true;
    for (const auto& row : power)
      for (const auto& e : row)
        if (!e.is_zero()) zero = false;
    if (zero) break;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        acc[i][j] = k % 2 ? acc[i][j] - power[i][j] : acc[i][j] + power[i][j];
  }
  return gm_mul(acc, binv);
}

bool is_parallelization_automorphism(const SuperDomainMap& f, const GMatrix& a) {
  GMatrix lhs = gm_mul(a, jacobian(f));
  GMatrix rhs = gm_pullback(f, a);
  return lhs == rhs;
}

FamilyDecomposition family_decompose(std::size_t n_params, std::size_t n_even, std::size_t n_odd,
                                     const std::vector<GrassmannPoly>& components) {
  const std::size_t nm = n_even + n_odd;
  const OddMask pmask = (OddMask(1) << n_params) - 1;
  if (components.size() != nm)
    throw std::invalid_argument("family_decompose: one component per domain coordinate required");
  for (const auto& c : components)
    if (c.n_even() != n_even || c.n_odd() != n_params + n_odd)
      throw std::invalid_argument("family_decompose: components must live on the combined algebra");

  // base map: the parameter-free part
  std::vector<GrassmannPoly> base_comps;
  for (const auto& c : components) {
    GrassmannPoly b(n_even, n_odd);
    for (const auto& [mask, poly] : c.terms())
      if ((mask & pmask) == 0) b.add_term(mask >> n_params, poly);
    base_comps.push_back(std::move(b));
  }
  SuperDomainMap base(n_even, n_odd, std::move(base_comps));

  FamilyDecomposition out{base, {}};
  if (n_params == 0) {
    if (family_recompose(0, base, {}) != components)
      throw std::invalid_argument("family_decompose: components are not parameter-free");
    return out;
  }

  GMatrix jinv = gm_inverse(jacobian(base));

  // coefficient of eta^J, a domain superfunction (parameters sit below the
  // domain generators, so no reordering sign appears)
  auto coeff_of = [&](const GrassmannPoly& g, OddMask j) {
    GrassmannPoly r(n_even, n_odd);
    for (const auto& [mask, poly] : g.terms())
      if ((mask & pmask) == j) r.add_term(mask >> n_params, poly);
    return r;
  };

  for (std::size_t size = 1; size <= n_params; ++size) {
    for (OddMask j = 1; j <= pmask; ++j) {
      if (static_cast<std::size_t>(std::popcount(j)) != size) continue;
      std::vector<GrassmannPoly> partial = family_recompose(n_params, base, out.fields);
      std::vector<GrassmannPoly> residue;
      for (std::size_t c = 0; c < nm; ++c)
        residue.push_back(coeff_of(components[c], j) - coeff_of(partial[c], j));

      // solve X_J(base_c) = residue_c for the coefficients of X_J
      std::vector<GrassmannPoly> coeffs(nm, GrassmannPoly(n_even, n_odd));
      bool nonzero = false;
      for (std::size_t r = 0; r < nm; ++r) {
        GrassmannPoly acc(n_even, n_odd);
        for (std::size_t c = 0; c < nm; ++c) {
          if (residue[c].is_zero() || jinv[c][r].is_zero()) continue;
          acc = acc + residue[c] * jinv[c][r];
        }
        if (!acc.is_zero()) nonzero = true;
        coeffs[r] = std::move(acc);
      }
      if (!nonzero) continue;
      Parity p = size % 2 ? Parity::Odd : Parity::Even;
      out.fields.emplace(j, SuperVectorField(n_even, n_odd, p, std::move(coeffs)));
    }
  }

  if (family_recompose(n_params, base, out.fields) != components)
    throw std::invalid_argument("family_decompose: input is not a family of the product form");
  return out;
}

std::vector<GrassmannPoly> family_recompose(std::size_t n_params, const SuperDomainMap& base,
                                            const std::map<OddMask, SuperVectorField>& fields) {
  const std::size_t n_even = base.n_even(), n_odd = base.n_odd();
  const std::size_t total_odd = n_params + n_odd;

  // embed the field X_I into the combined algebra, acting on domain slots
  auto embed_field = [&](const SuperVectorField& f) {
    std::vector<GrassmannPoly> coeffs(n_even + total_odd, GrassmannPoly(n_even, total_odd));
    for (std::size_t i = 0; i < n_even; ++i)
      coeffs[i] = shift_odd(f.coeff(i), n_params, total_odd);
    for (std::size_t jj = 0; jj < n_odd; ++jj)
      coeffs[n_even + n_params + jj] = shift_odd(f.coeff(n_even + jj), n_params, total_odd);
    return SuperVectorField(n_even, total_odd, f.parity(), std::move(coeffs));
  };

  std::vector<GrassmannPoly> comps;
  for (std::size_t c = 0; c < n_even + n_odd; ++c)
    comps.push_back(shift_odd(base.component(c), n_params, total_odd));

  for (std::size_t k = 1; k <= n_params; ++k) {
    const OddMask top = OddMask(1) << (k - 1);
    std::vector<std::pair<OddMask, SuperVectorField>> factor;
    for (const auto& [mask, f] : fields)
      if ((mask & top) && (mask >> k) == 0) factor.emplace_back(mask, embed_field(f));
    if (factor.empty()) continue;
    for (auto& g : comps) {
      GrassmannPoly next = g;
      for (const auto& [mask, xf] : factor) {
        GrassmannPoly eta_i = GrassmannPoly::from_poly(
            total_odd, mask, Poly::constant(n_even, GaussianRational(1)));
        next = next + eta_i * xf.apply(g);
      }
      g = std::move(next);
    }
  }
  return comps;
}

bool family_is_parallelization_automorphism(std::size_t n_params,
                                            const std::vector<GrassmannPoly>& components,
                                            const std::vector<SuperVectorField>& frame) {
  FamilyDecomposition d = family_decompose(
      n_params, frame.empty() ? 0 : frame[0].n_even(), frame.empty() ? 0 : frame[0].n_odd(),
      components);
  GMatrix a;
  for (const auto& e : frame) a.push_back(e.coeffs());
  if (!is_parallelization_automorphism(d.base, a)) return false;
  for (const auto& [mask, xf] : d.fields)
    for (const auto& e : frame)
      if (!vf_bracket(xf, e).is_zero()) return false;
  return true;
}

} // namespace supercalc
