#pragma once

// Random instance generators shared by the unit tests and the acceptance run.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "subq/qcat/qcat.hpp"
#include "subq/rings/integer_ring.hpp"
#include "subq/rings/linear_algebra.hpp"
#include "subq/rings/prime_field.hpp"

namespace testsupport {

using subq::rings::FpMatrix;
using subq::rings::IntegerRing;
using subq::rings::IntMatrix;
using subq::rings::Matrix;
using subq::rings::PrimeField;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return lo + long(rng() % std::uint64_t(hi - lo + 1)); }

template <class Ring>
Matrix<Ring> random_matrix(const Ring& ring, Rng& rng, std::size_t r, std::size_t c, long bound = 5) {
  Matrix<Ring> m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ring.from_int(uniform(rng, -bound, bound));
  return m;
}

/// Sparse-ish variant: each entry is zero with probability 1/2.
template <class Ring>
Matrix<Ring> random_sparse_matrix(const Ring& ring, Rng& rng, std::size_t r, std::size_t c, long bound = 5) {
  Matrix<Ring> m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 2) m(i, j) = ring.from_int(uniform(rng, -bound, bound));
  return m;
}

template <class Ring>
subq::qcat::QObject<Ring> random_object(const Ring& ring, Rng& rng, std::size_t max_rank = 4) {
  const std::size_t a = std::size_t(uniform(rng, 1, long(max_rank)));
  const std::size_t b = std::size_t(uniform(rng, 1, long(max_rank)));
  const std::size_t c = std::size_t(uniform(rng, 0, long(max_rank) - 1));
  auto gamma = rng() % 3 == 0 ? Matrix<Ring>::identity(ring, a) : random_matrix(ring, rng, a, b);
  return subq::qcat::QObject<Ring>(gamma, random_sparse_matrix(ring, rng, c, gamma.cols()));
}

/// A well-defined morphism x -> y: random candidates first, then small
/// multiples of the last candidate, then zero.
template <class Ring>
subq::qcat::QMorphism<Ring> random_morphism(const subq::qcat::QObject<Ring>& x, const subq::qcat::QObject<Ring>& y,
                                            Rng& rng, int tries = 12) {
  const auto& ring = x.ring();
  Matrix<Ring> cand(ring, x.source_rank(), y.source_rank());
  for (int t = 0; t < tries; ++t) {
    cand = random_sparse_matrix(ring, rng, x.source_rank(), y.source_rank());
    try {
      return subq::qcat::make_qmorphism(x, y, cand);
    } catch (const subq::IllDefinedMorphism&) {
    }
  }
  for (long k = 2; k <= 12; ++k) {
    try {
      return subq::qcat::make_qmorphism(x, y, subq::rings::scale(ring.from_int(k), cand));
    } catch (const subq::IllDefinedMorphism&) {
    }
  }
  return subq::qcat::zero_morphism(x, y);
}

/// A well-defined alpha from x. The random target is used as is when alpha
/// already respects it; otherwise its relations are enlarged by the images of
/// the syzygy generators of x.
template <class Ring>
subq::qcat::QMorphism<Ring> random_morphism_from(const subq::qcat::QObject<Ring>& x, Rng& rng, std::size_t max_rank = 4) {
  const auto& ring = x.ring();
  auto base = random_object(ring, rng, max_rank);
  auto alpha = random_sparse_matrix(ring, rng, x.source_rank(), base.source_rank());
  try {
    return subq::qcat::make_qmorphism(x, base, alpha);
  } catch (const subq::IllDefinedMorphism&) {
  }
  const auto gens = subq::addcat::syzygy_generators(x);
  const auto extra = gens * alpha * base.gamma();
  subq::qcat::QObject<Ring> y(base.gamma(), subq::rings::stack(base.rho(), extra));
  return subq::qcat::make_qmorphism(x, y, alpha);
}

/// A random source t with a well-defined alpha: t -> y. The source carries
/// alpha*gamma_y as an extra block of its own first leg, so every syzygy of
/// t is pushed into Syz(y).
template <class Ring>
subq::qcat::QMorphism<Ring> random_morphism_into(const subq::qcat::QObject<Ring>& y, Rng& rng, std::size_t max_rank = 4) {
  const auto& ring = y.ring();
  auto base = random_object(ring, rng, max_rank);
  auto alpha = random_sparse_matrix(ring, rng, base.source_rank(), y.source_rank());
  auto gamma = subq::rings::augment(base.gamma(), alpha * y.gamma());
  auto rho = subq::rings::block_diagonal(base.rho(), y.rho());
  return subq::qcat::make_qmorphism(subq::qcat::QObject<Ring>(gamma, rho), y, alpha);
}

/// Invertible matrix: a product of random elementary row operations (unit
/// pivots), so the inverse exists over Z as well.
template <class Ring>
Matrix<Ring> random_invertible(const Ring& ring, Rng& rng, std::size_t n, int steps = 6) {
  auto u = Matrix<Ring>::identity(ring, n);
  if (n < 2) return rng() % 2 ? u : -u;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    const auto k = ring.from_int(uniform(rng, -2, 2));
    for (std::size_t col = 0; col < n; ++col) u(i, col) = ring.add(u(i, col), ring.mul(k, u(j, col)));
  }
  return u;
}

template <class Ring>
Matrix<Ring> inverse(const Matrix<Ring>& u) {
  auto inv = decide_lift(u, Matrix<Ring>::identity(u.ring(), u.rows()));
  return *inv;  // callers only pass invertible matrices
}

/// A valid instance: (x, phi: x -> y), either by rejection against a fixed
/// random target or by construction of the target.
template <class Ring>
subq::qcat::QMorphism<Ring> random_instance(const Ring& ring, Rng& rng) {
  auto x = random_object(ring, rng);
  if (rng() % 2) return random_morphism_from(x, rng);
  auto phi = random_morphism(x, random_object(ring, rng), rng);
  return phi.alpha().is_zero() ? random_morphism_from(x, rng) : phi;
}

}  // namespace testsupport
