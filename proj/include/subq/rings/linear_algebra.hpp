#pragma once

#include <optional>
#include <string>

#include "subq/rings/normal_forms.hpp"

namespace subq::rings {

namespace detail {

/// Solves y * H = b for the echelon rows of `ef`, returning x = y * U so
/// that x * A = b, or nothing when b is not in the row space.
template <class Ring>
std::optional<Matrix<Ring>> solve_row(const EchelonForm<Ring>& ef, const Matrix<Ring>& b, std::size_t row) {
  const auto& ring = ef.h.ring();
  const std::size_t n = ef.h.cols();
  std::vector<typename Ring::Element> residual(n);
  for (std::size_t j = 0; j < n; ++j) residual[j] = b(row, j);
  std::vector<typename Ring::Element> y(ef.rank, ring.zero());
  for (std::size_t i = 0; i < ef.rank; ++i) {
    const std::size_t pc = ef.pivots[i];
    if (ring.is_zero(residual[pc])) continue;
    auto q = ring.divide_exact(residual[pc], ef.h(i, pc));
    if (!q) return std::nullopt;
    y[i] = *q;
    for (std::size_t j = pc; j < n; ++j) residual[j] = ring.sub(residual[j], ring.mul(*q, ef.h(i, j)));
  }
  for (const auto& r : residual)
    if (!ring.is_zero(r)) return std::nullopt;
  Matrix<Ring> x(ring, 1, ef.u.cols());
  for (std::size_t i = 0; i < ef.rank; ++i) {
    if (ring.is_zero(y[i])) continue;
    for (std::size_t k = 0; k < ef.u.cols(); ++k) x(0, k) = ring.add(x(0, k), ring.mul(y[i], ef.u(i, k)));
  }
  return x;
}

template <class Ring>
std::optional<Matrix<Ring>> decide_lift_impl(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  require_same_ring(a, b, "decide_lift");
  if (a.cols() != b.cols())
    throw DimensionError("decide_lift: column counts " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.cols()) + " differ");
  const auto ef = echelon_form(a);
  Matrix<Ring> x(a.ring(), b.rows(), a.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    auto xr = solve_row(ef, b, r);
    if (!xr) return std::nullopt;
    for (std::size_t k = 0; k < a.rows(); ++k) x(r, k) = (*xr)(0, k);
  }
  return x;
}

template <class Ring>
Matrix<Ring> row_syzygies_impl(const Matrix<Ring>& a) {
  const auto ef = echelon_form(a);
  auto l = ef.u.row_block(ef.rank, a.rows());
  // Canonical generator matrix of the syzygy lattice/space.
  const auto canon = echelon_form(l);
  return canon.h.row_block(0, canon.rank);
}

}  // namespace detail

/// X with X*A = B when such X exists.
inline std::optional<IntMatrix> decide_lift(const IntMatrix& a, const IntMatrix& b) { return detail::decide_lift_impl(a, b); }
inline std::optional<FpMatrix> decide_lift(const FpMatrix& a, const FpMatrix& b) { return detail::decide_lift_impl(a, b); }

/// L with L*A = 0 whose rows generate every row syzygy of A. The result is
/// in Hermite (Z) resp. reduced echelon (GF(p)) form.
inline IntMatrix row_syzygies(const IntMatrix& a) { return detail::row_syzygies_impl(a); }
inline FpMatrix row_syzygies(const FpMatrix& a) { return detail::row_syzygies_impl(a); }

}  // namespace subq::rings
