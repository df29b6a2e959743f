#include "subq/noncoherent/noncoherent.hpp"

#include <algorithm>

namespace subq::noncoherent {

PolyMatrix to_poly_matrix(const RMatrix& m) {
  groebner::PolynomialRing ring(m.ring().field());
  std::vector<Poly> e;
  e.reserve(m.entries().size());
  for (const auto& v : m.entries()) e.push_back(v.poly());
  return PolyMatrix(ring, m.rows(), m.cols(), std::move(e));
}

RMatrix from_poly_matrix(const NoncoherentRing& ring, const PolyMatrix& m) {
  std::vector<RElement> e;
  e.reserve(m.entries().size());
  for (const auto& v : m.entries()) e.push_back(r_normalize(v));
  return RMatrix(ring, m.rows(), m.cols(), std::move(e));
}

unsigned min_cutoff(std::initializer_list<std::reference_wrapper<const RMatrix>> matrices) {
  unsigned n = 1;
  for (const RMatrix& m : matrices)
    for (const auto& v : m.entries()) n = std::max(n, v.max_x_index());
  return n;
}

SyzygyGenerators kernel_generators(const RMatrix& gamma) { return kernel_generators(gamma, min_cutoff({gamma})); }

SyzygyGenerators kernel_generators(const RMatrix& gamma, unsigned n) {
  if (n < min_cutoff({gamma})) throw PreconditionError("kernel_generators: cutoff below the x-support of gamma");
  const auto& ring = gamma.ring();
  groebner::PolynomialRing pring(ring.field());
  const PolyMatrix g = to_poly_matrix(gamma);

  SyzygyGenerators out;
  out.n = n;
  out.sigma = from_poly_matrix(ring, groebner::to_matrix(pring, groebner::rn_row_syzygies(g, n), gamma.rows()));

  PolyMatrix gx(pring, g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) gx(i, j) = g(i, j).x_part();
  out.tau = from_poly_matrix(ring, groebner::to_matrix(pring, groebner::module_syzygies(gx), gamma.rows()));
  return out;
}

std::optional<RMatrix> decide_lift_R(const RMatrix& a, const RMatrix& b) {
  rings::detail::require_same_ring(a, b, "decide_lift");
  if (a.cols() != b.cols()) throw DimensionError("decide_lift: column counts differ");
  auto x = groebner::rn_decide_lift(to_poly_matrix(a), to_poly_matrix(b), min_cutoff({a, b}));
  if (!x) return std::nullopt;
  return from_poly_matrix(a.ring(), *x);
}

addcat::InclusionDecision<NoncoherentRing> syzygy_inclusion_R(const RCospan& first, const RCospan& second) {
  const auto [f, s] = addcat::simplify_cospan_pair(first, second);
  const auto& ring = first.ring();
  const unsigned n = min_cutoff({f.gamma(), s.gamma(), s.rho()});
  const SyzygyGenerators gens = kernel_generators(f.gamma(), n);

  // sigma_i and x_{n+1} * tau_j; by symmetry among the x_i with i > n the
  // single index n+1 stands for all of them.
  const RElement next = r_normalize(Poly::monomial(ring.field(), groebner::Monomial::x(n + 1)));
  RMatrix candidates = rings::stack(gens.sigma, rings::scale(next, gens.tau));

  addcat::InclusionDecision<NoncoherentRing> d;
  d.generators = candidates;
  for (std::size_t i = 0; i < candidates.rows(); ++i) {
    const RMatrix g = candidates.row(i);
    auto omega = decide_lift_R(s.rho(), g * s.gamma());
    if (!omega) {
      d.included = false;
      d.counterexample = g;
      d.generator_witnesses.clear();
      return d;
    }
    d.generator_witnesses.push_back(std::move(*omega));
  }
  d.included = true;
  d.witness = [second](const RMatrix& sigma) { return decide_lift_R(second.rho(), sigma * second.gamma()); };
  return d;
}

}  // namespace subq::noncoherent
