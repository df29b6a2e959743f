#pragma once

// Degree-bounded brute force for syzygies: the Macaulay matrix of s*A = 0
// with s ranging over polynomial vectors of bounded degree, solved by
// linear algebra over GF(p).

#include <map>
#include <vector>

#include "subq/groebner/groebner.hpp"
#include "subq/rings/linear_algebra.hpp"

namespace testsupport {

using subq::groebner::ModuleElement;
using subq::groebner::Monomial;
using subq::groebner::Poly;
using subq::groebner::PolyMatrix;

/// Monomials in x1..x_nx (and z if with_z) of degree <= d; mixed x*z
/// monomials are skipped when `no_mixed`.
inline std::vector<Monomial> monomials_up_to(unsigned nx, bool with_z, unsigned d, bool no_mixed) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(nx, 0);
  const unsigned nvars = nx + (with_z ? 1 : 0);
  std::vector<std::uint32_t> all(nvars, 0);
  // Odometer over exponent vectors with total degree <= d.
  for (;;) {
    unsigned deg = 0;
    for (auto v : all) deg += v;
    if (deg <= d) {
      Monomial m(std::vector<std::uint32_t>(all.begin(), all.begin() + nx), with_z ? all[nx] : 0);
      if (!(no_mixed && m.mixes_z_and_x())) out.push_back(m);
    }
    std::size_t k = 0;
    while (k < nvars) {
      if (++all[k] <= d) break;
      all[k] = 0;
      ++k;
    }
    if (k == nvars) break;
  }
  return out;
}

/// All s with deg(s_i) <= d and s*A = 0 (modulo x_i z when `quotient`), as
/// a GF(p)-basis of that finite-dimensional space.
inline std::vector<ModuleElement> bounded_syzygies(const PolyMatrix& a, unsigned nx, bool with_z, unsigned d,
                                                   bool quotient) {
  const auto field = a.ring().field();
  const auto mons = monomials_up_to(nx, with_z, d, quotient);
  // Column index per (column of A, monomial of the product).
  std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t> colidx;
  auto key = [](const Monomial& m, std::size_t j) {
    std::vector<std::uint32_t> k;
    for (unsigned i = 1; i <= m.max_x_index(); ++i) k.push_back(m.x_exponent(i));
    k.push_back(1000000 + m.z_exponent());
    return std::make_pair(j, k);
  };
  struct Entry {
    std::size_t row, col;
    std::uint32_t coeff;
  };
  std::vector<Entry> entries;
  const std::size_t nrows = a.rows() * mons.size();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t u = 0; u < mons.size(); ++u)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Poly prod = a(i, j).times_term(mons[u], 1);
        if (quotient) prod = prod.without_mixed_monomials();
        for (const auto& t : prod.terms()) {
          auto k = key(t.mono, j);
          auto it = colidx.find(k);
          if (it == colidx.end()) it = colidx.emplace(k, colidx.size()).first;
          entries.push_back({i * mons.size() + u, it->second, t.coeff});
        }
      }
  subq::rings::FpMatrix mac(field, nrows, colidx.size());
  for (const auto& e : entries) mac(e.row, e.col) = field.add(mac(e.row, e.col), e.coeff);
  const auto null = subq::rings::row_syzygies(mac);
  std::vector<ModuleElement> out;
  for (std::size_t r = 0; r < null.rows(); ++r) {
    ModuleElement s(field, a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t u = 0; u < mons.size(); ++u)
        if (null(r, i * mons.size() + u)) s[i] += Poly::monomial(field, mons[u], null(r, i * mons.size() + u));
    out.push_back(std::move(s));
  }
  return out;
}

/// Random polynomial in x1..x_nx (and z) with degree <= d over the field.
template <class RngT>
Poly random_poly(const subq::rings::PrimeField& field, RngT& rng, unsigned nx, bool with_z, unsigned d,
                 bool no_mixed, unsigned terms = 3) {
  const auto mons = monomials_up_to(nx, with_z, d, no_mixed);
  std::vector<subq::groebner::Term> ts;
  for (unsigned k = 0; k < terms; ++k)
    ts.push_back({mons[rng() % mons.size()], std::uint32_t(rng() % field.characteristic())});
  return Poly::from_terms(field, std::move(ts));
}

}  // namespace testsupport
