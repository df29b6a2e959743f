#pragma once

#include <cstddef>
#include <vector>

#include "subq/rings/integer_ring.hpp"
#include "subq/rings/matrix.hpp"
#include "subq/rings/prime_field.hpp"

namespace subq::rings {

using IntMatrix = Matrix<IntegerRing>;
using FpMatrix = Matrix<PrimeField>;

/// Row echelon form with its transformation: U * A = H, U invertible.
/// The first `rank` rows of H are nonzero with pivots in `pivots`
/// (strictly increasing columns); the remaining rows are zero.
template <class Ring>
struct EchelonForm {
  Matrix<Ring> h;
  Matrix<Ring> u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Row-style Hermite normal form over Z: pivots positive, entries above a
/// pivot reduced into [0, pivot); U unimodular.
EchelonForm<IntegerRing> hermite_normal_form(const IntMatrix& a);

/// Reduced row echelon form over GF(p): pivots 1, zeros above and below.
EchelonForm<PrimeField> reduced_row_echelon(const FpMatrix& a);

inline EchelonForm<IntegerRing> echelon_form(const IntMatrix& a) { return hermite_normal_form(a); }
inline EchelonForm<PrimeField> echelon_form(const FpMatrix& a) { return reduced_row_echelon(a); }

/// U * A * V = D with D diagonal, d_i | d_{i+1}, d_i >= 0; U, V unimodular.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;
  std::vector<mpz_class> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Determinant of a square integer matrix (fraction-free elimination).
mpz_class determinant(const IntMatrix& a);

}  // namespace subq::rings
