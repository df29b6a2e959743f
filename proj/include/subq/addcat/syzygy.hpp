#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subq/addcat/cospan.hpp"
#include "subq/noncoherent/noncoherent.hpp"
#include "subq/rings/linear_algebra.hpp"

namespace subq::addcat {

/// omega with sigma*gamma = omega*rho, or nothing when sigma is not a syzygy.
template <class Ring>
std::optional<Matrix<Ring>> syzygy_membership(const Matrix<Ring>& sigma, const Cospan<Ring>& cs) {
  if (sigma.cols() != cs.source_rank())
    throw DimensionError("syzygy_membership: sigma has " + std::to_string(sigma.cols()) +
                         " columns, first object has rank " + std::to_string(cs.source_rank()));
  return decide_lift(cs.rho(), sigma * cs.gamma());
}

/// Rows generating Syz(cs): the A-block of the row syzygies of [gamma; rho].
template <class Ring>
  requires Ring::kFiniteSyzygies
Matrix<Ring> syzygy_generators(const Cospan<Ring>& cs) {
  const auto l = rings::row_syzygies(rings::stack(cs.gamma(), cs.rho()));
  const auto block = l.col_block(0, cs.source_rank());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < block.rows(); ++i)
    if (!block.row_is_zero(i)) keep.push_back(i);
  return block.select_rows(keep);
}

template <class Ring>
  requires Ring::kFiniteSyzygies
InclusionDecision<Ring> syzygy_inclusion(const Cospan<Ring>& first, const Cospan<Ring>& second) {
  if (first.source_rank() != second.source_rank())
    throw DimensionError("syzygy inclusion needs a common first object");
  InclusionDecision<Ring> d;
  d.generators = syzygy_generators(first);
  for (std::size_t i = 0; i < d.generators.rows(); ++i) {
    auto omega = syzygy_membership(d.generators.row(i), second);
    if (!omega) {
      d.counterexample = d.generators.row(i);
      d.generator_witnesses.clear();
      return d;
    }
    d.generator_witnesses.push_back(std::move(*omega));
  }
  d.included = true;
  d.witness = [second](const Matrix<Ring>& sigma) { return syzygy_membership(sigma, second); };
  return d;
}

using noncoherent::syzygy_inclusion;

/// Biased weak pullback of (alpha: A -> B, gamma: C -> B): omega*alpha =
/// pi*gamma, and every tau: T -> C with tau*gamma in im(alpha) factors as
/// tau = lift(tau)*pi. Only the pi-side triangle is guaranteed.
template <class Ring>
struct BiasedWeakPullback {
  Matrix<Ring> pi;     // P -> C
  Matrix<Ring> omega;  // P -> A
  std::size_t apex_rank() const { return pi.rows(); }
  /// u(tau) with u(tau)*pi = tau.
  Matrix<Ring> lift(const Matrix<Ring>& tau) const {
    auto u = decide_lift(pi, tau);
    if (!u) throw PreconditionError("biased weak pullback: tau*gamma does not factor through alpha");
    return *u;
  }
};

template <class Ring>
  requires Ring::kFiniteSyzygies
BiasedWeakPullback<Ring> biased_weak_pullback(const Matrix<Ring>& alpha, const Matrix<Ring>& gamma) {
  rings::detail::require_same_ring(alpha, gamma, "biased_weak_pullback");
  if (alpha.cols() != gamma.cols()) throw DimensionError("biased_weak_pullback: legs have different targets");
  const std::size_t a = alpha.rows(), c = gamma.rows();
  // l_A*alpha + l_C*gamma = 0 for every row (l_A | l_C).
  const auto l = rings::row_syzygies(rings::stack(alpha, gamma));
  const auto pi_raw = -l.col_block(a, a + c);
  const auto omega_raw = l.col_block(0, a);
  // Keep a row basis of im(pi): rows with zero projection only feed the
  // omega-side triangle, which a biased pullback does not need.
  const auto ef = rings::echelon_form(pi_raw);
  BiasedWeakPullback<Ring> p;
  p.pi = ef.h.row_block(0, ef.rank);
  p.omega = (ef.u * omega_raw).row_block(0, ef.rank);
  return p;
}

template <class Ring>
  requires(!Ring::kFiniteSyzygies)
BiasedWeakPullback<Ring> biased_weak_pullback(const Matrix<Ring>&, const Matrix<Ring>&) {
  throw CapabilityError("biased weak pullback unavailable: backend " + Ring().name() + " lacks finite row syzygies");
}

template <class Ring>
struct WeakKernel {
  Matrix<Ring> kappa;  // K -> C with kappa*gamma = 0
  std::size_t rank() const { return kappa.rows(); }
  Matrix<Ring> lift(const Matrix<Ring>& tau) const {
    auto u = decide_lift(kappa, tau);
    if (!u) throw PreconditionError("weak kernel: tau*gamma is not zero");
    return *u;
  }
};

/// Weak kernel of gamma: C -> B as the biased weak pullback of (0 -> B, gamma).
template <class Ring>
WeakKernel<Ring> weak_kernel(const Matrix<Ring>& gamma) {
  Matrix<Ring> zero(gamma.ring(), 0, gamma.cols());
  return {biased_weak_pullback(zero, gamma).pi};
}

/// Ordinary weak pullback of (alpha: A -> B, gamma: C -> B), built as the
/// weak kernel of [alpha; -gamma]: A + C -> B.
template <class Ring>
struct WeakPullback {
  Matrix<Ring> to_a;  // P -> A
  Matrix<Ring> to_c;  // P -> C
  std::size_t apex_rank() const { return to_a.rows(); }
};

template <class Ring>
WeakPullback<Ring> weak_pullback(const Matrix<Ring>& alpha, const Matrix<Ring>& gamma) {
  const auto k = weak_kernel(rings::stack(alpha, -gamma));
  return {k.kappa.col_block(0, alpha.rows()), k.kappa.col_block(alpha.rows(), alpha.rows() + gamma.rows())};
}

template <class Ring>
Cospan<Ring> direct_sum(const std::vector<Cospan<Ring>>& cospans) {
  if (cospans.empty()) throw PreconditionError("direct_sum of an empty list has no ring");
  Matrix<Ring> gamma = cospans.front().gamma(), rho = cospans.front().rho();
  for (std::size_t i = 1; i < cospans.size(); ++i) {
    gamma = rings::block_diagonal(gamma, cospans[i].gamma());
    rho = rings::block_diagonal(rho, cospans[i].rho());
  }
  return Cospan<Ring>(std::move(gamma), std::move(rho));
}

}  // namespace subq::addcat
