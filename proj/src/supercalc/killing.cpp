#include "supercalc/killing.hpp"

#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace supercalc {

namespace {

using gsalg::GaussianRational;
using gsalg::Parity;
using gsalg::Vec;

struct AnsatzTerm {
  std::size_t slot;
  OddMask mask;
  Exponents expo;
};

void enumerate_exponents(std::size_t nvars, unsigned budget, Exponents& cur,
                         std::vector<Exponents>& out) {
  if (cur.size() == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= budget; ++e) {
    cur.push_back(e);
    enumerate_exponents(nvars, budget - e, cur, out);
    cur.pop_back();
  }
}

std::vector<AnsatzTerm> build_ansatz(std::size_t n, std::size_t m, Parity field_parity,
                                     unsigned max_degree) {
  std::vector<Exponents> expos;
  Exponents cur;
  enumerate_exponents(n, max_degree, cur, expos);

  std::vector<AnsatzTerm> terms;
  for (std::size_t slot = 0; slot < n + m; ++slot) {
    Parity coeff_parity = slot < n ? field_parity : field_parity + Parity::Odd;
    for (OddMask mask = 0; mask < (OddMask(1) << m); ++mask) {
      Parity mp = std::popcount(mask) % 2 ? Parity::Odd : Parity::Even;
      if (mp != coeff_parity) continue;
      for (const auto& e : expos) terms.push_back({slot, mask, e});
    }
  }
  return terms;
}

SuperVectorField term_field(std::size_t n, std::size_t m, Parity p, const AnsatzTerm& t,
                            const GaussianRational& c) {
  SuperVectorField f(n, m, p);
  Poly mono(n);
  mono.add_term(t.expo, c);
  f.set_coeff(t.slot, GrassmannPoly::from_poly(m, t.mask, mono));
  return f;
}

struct RowKey {
  std::size_t eq;
  std::size_t slot;
  OddMask mask;
  Exponents expo;
  bool operator<(const RowKey& o) const {
    if (eq != o.eq) return eq < o.eq;
    if (slot != o.slot) return slot < o.slot;
    if (mask != o.mask) return mask < o.mask;
    return expo < o.expo;
  }
};

// Linear system from per-unknown equation values; each equation value is a
// list of (slot-tagged) GrassmannPolys that must vanish identically.
KillingBasis solve_linear(std::size_t n, std::size_t m,
                          const std::function<std::vector<GrassmannPoly>(
                              const SuperVectorField&, std::size_t)>& equation,
                          std::size_t n_equations, unsigned max_degree) {
  KillingBasis basis;
  basis.n_even = n;
  basis.n_odd = m;

  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<AnsatzTerm> ansatz = build_ansatz(n, m, p, max_degree);
    if (ansatz.empty()) continue;

    std::map<RowKey, std::size_t> rows;
    std::vector<std::map<std::size_t, GaussianRational>> cols(ansatz.size());
    for (std::size_t u = 0; u < ansatz.size(); ++u) {
      SuperVectorField f = term_field(n, m, p, ansatz[u], GaussianRational(1));
      for (std::size_t eq = 0; eq < n_equations; ++eq) {
        std::vector<GrassmannPoly> vals = equation(f, eq);
        for (std::size_t slot = 0; slot < vals.size(); ++slot)
          for (const auto& [mask, poly] : vals[slot].terms())
            for (const auto& [expo, coeff] : poly.terms()) {
              RowKey key{eq, slot, mask, expo};
              auto [it, fresh] = rows.emplace(key, rows.size());
              cols[u][it->second] += coeff;
            }
      }
    }

    gsalg::Matrix sys(rows.size(), ansatz.size());
    for (std::size_t u = 0; u < ansatz.size(); ++u)
      for (const auto& [r, c] : cols[u])
        if (!c.is_zero()) sys.at(r, u) = c;

    for (const Vec& sol : gsalg::kernel_basis(std::move(sys))) {
      SuperVectorField f(n, m, p);
      std::vector<GrassmannPoly> coeffs(n + m, GrassmannPoly(n, m));
      for (std::size_t u = 0; u < ansatz.size(); ++u) {
        if (sol[u].is_zero()) continue;
        Poly mono(n);
        mono.add_term(ansatz[u].expo, sol[u]);
        coeffs[ansatz[u].slot] =
            coeffs[ansatz[u].slot] + GrassmannPoly::from_poly(m, ansatz[u].mask, mono);
      }
      (p == Parity::Even ? basis.even_fields : basis.odd_fields)
          .emplace_back(n, m, p, std::move(coeffs));
    }
  }
  return basis;
}

} // namespace

using gsalg::Vec;

std::vector<const SuperVectorField*> KillingBasis::all() const {
  std::vector<const SuperVectorField*> out;
  for (const auto& f : even_fields) out.push_back(&f);
  for (const auto& f : odd_fields) out.push_back(&f);
  return out;
}

KillingBasis killing_parallelization(const std::vector<SuperVectorField>& frame,
                                     unsigned max_degree) {
  if (frame.empty()) throw std::invalid_argument("killing_parallelization: empty frame");
  const std::size_t n = frame[0].n_even(), m = frame[0].n_odd();
  if (frame.size() != n + m)
    throw std::invalid_argument("killing_parallelization: frame needs one field per coordinate");

  // body-level invertibility on a fixed sample grid
  std::vector<std::vector<GaussianRational>> samples;
  std::vector<GaussianRational> zero(n, GaussianRational(0));
  samples.push_back(zero);
  std::vector<GaussianRational> ones(n, GaussianRational(1));
  samples.push_back(ones);
  std::vector<GaussianRational> ramp(n), half(n);
  for (std::size_t i = 0; i < n; ++i) {
    ramp[i] = GaussianRational(static_cast<long>(i) + 2);
    half[i] = GaussianRational(1, 2 + static_cast<long>(i));
  }
  samples.push_back(ramp);
  samples.push_back(half);
  for (const auto& pt : samples) {
    gsalg::Matrix a(n + m, n + m);
    for (std::size_t i = 0; i < n + m; ++i)
      for (std::size_t c = 0; c < n + m; ++c) a.at(i, c) = frame[i].coeff(c).body().eval(pt);
    if (gsalg::rank(a) != n + m)
      throw std::domain_error("killing_parallelization: frame degenerate at a sample body point");
  }

  auto equation = [&frame](const SuperVectorField& f, std::size_t i) {
    return vf_bracket(f, frame[i]).coeffs();
  };
  return solve_linear(n, m, equation, frame.size(), max_degree);
}

KillingBasis killing_metric(std::size_t n_even, std::size_t n_odd, const Matrix& j,
                            unsigned max_degree) {
  const std::size_t nm = n_even + n_odd;
  if (j.rows() != nm || j.cols() != nm)
    throw std::invalid_argument("killing_metric: metric size mismatch");
  auto parity_of = [&](std::size_t k) { return k < n_even ? Parity::Even : Parity::Odd; };
  for (std::size_t r = 0; r < nm; ++r)
    for (std::size_t c = 0; c < nm; ++c) {
      if (parity_of(r) != parity_of(c)) {
        if (!j.at(r, c).is_zero())
          throw std::invalid_argument("killing_metric: metric must be even");
        continue;
      }
      GaussianRational sym = j.at(c, r);
      if (gsalg::koszul(parity_of(r), parity_of(c)) < 0) sym = -sym;
      if (j.at(r, c) != sym) throw std::invalid_argument("killing_metric: not supersymmetric");
    }
  if (gsalg::rank(j) != nm) throw std::domain_error("killing_metric: degenerate metric");

  // Invariance of J: for coordinate directions p, q,
  //   sum_r (d_p a_r) J_{rq} + (-1)^{|X|(|p|+|q|)+|p||q|+|p|} sum_r (d_q a_r) J_{pr} = 0.
  auto equation = [&, n_even, n_odd](const SuperVectorField& f, std::size_t eq) {
    const std::size_t p = eq / nm, q = eq % nm;
    GrassmannPoly acc(n_even, n_odd);
    for (std::size_t r = 0; r < nm; ++r) {
      if (!j.at(r, q).is_zero()) acc = acc + f.coeff(r).partial(p).scaled(j.at(r, q));
    }
    int e = gsalg::parity_bit(f.parity()) *
                (gsalg::parity_bit(parity_of(p)) + gsalg::parity_bit(parity_of(q))) +
            gsalg::parity_bit(parity_of(p)) * gsalg::parity_bit(parity_of(q)) +
            gsalg::parity_bit(parity_of(p));
    for (std::size_t r = 0; r < nm; ++r) {
      if (j.at(p, r).is_zero()) continue;
      GrassmannPoly t = f.coeff(r).partial(q).scaled(j.at(p, r));
      acc = e % 2 ? acc - t : acc + t;
    }
    return std::vector<GrassmannPoly>{acc};
  };
  return solve_linear(n_even, n_odd, equation, nm * nm, max_degree);
}

Matrix evaluation_matrix(const KillingBasis& basis, const std::vector<GaussianRational>& body) {
  auto fields = basis.all();
  Matrix m(basis.n_even + basis.n_odd, fields.size());
  for (std::size_t k = 0; k < fields.size(); ++k)
    for (std::size_t c = 0; c < basis.n_even + basis.n_odd; ++c)
      m.at(c, k) = fields[k]->coeff(c).body().eval(body);
  return m;
}

bool field_in_span(const std::vector<SuperVectorField>& fields, const SuperVectorField& candidate) {
  if (candidate.is_zero()) return true;
  // coordinatize on the union of occurring monomials
  std::map<std::tuple<std::size_t, OddMask, Exponents>, std::size_t> coords;
  auto index_field = [&](const SuperVectorField& f) {
    for (std::size_t slot = 0; slot < f.n_coords(); ++slot)
      for (const auto& [mask, poly] : f.coeff(slot).terms())
        for (const auto& [expo, c] : poly.terms())
          coords.emplace(std::make_tuple(slot, mask, expo), coords.size());
  };
  for (const auto& f : fields) index_field(f);
  index_field(candidate);

  gsalg::Matrix sys(coords.size(), fields.size());
  Vec rhs(coords.size());
  auto fill = [&](const SuperVectorField& f, std::size_t col, bool into_rhs) {
    for (std::size_t slot = 0; slot < f.n_coords(); ++slot)
      for (const auto& [mask, poly] : f.coeff(slot).terms())
        for (const auto& [expo, c] : poly.terms()) {
          std::size_t r = coords.at(std::make_tuple(slot, mask, expo));
          if (into_rhs)
            rhs[r] = c;
          else
            sys.at(r, col) = c;
        }
  };
  for (std::size_t k = 0; k < fields.size(); ++k) fill(fields[k], k, false);
  fill(candidate, 0, true);

  Vec sol;
  return gsalg::solve(std::move(sys), std::move(rhs), sol);
}

bool bracket_closed(const KillingBasis& basis) {
  auto fields = basis.all();
  for (std::size_t a = 0; a < fields.size(); ++a)
    for (std::size_t b = a; b < fields.size(); ++b) {
      SuperVectorField br = vf_bracket(*fields[a], *fields[b]);
      const auto& target =
          br.parity() == gsalg::Parity::Even ? basis.even_fields : basis.odd_fields;
      if (!field_in_span(target, br)) return false;
    }
  return true;
}

} // namespace supercalc
