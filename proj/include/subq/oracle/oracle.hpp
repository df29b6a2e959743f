#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "subq/rings/normal_forms.hpp"

// Concrete abelian-group semantics of cospans over Z, built only on the
// normal forms of the rings module. An object (gamma, rho) denotes
// im(gamma) / (im(gamma) cap im(rho)) = Z^a / S, where S is the lattice of
// rows s with s*gamma in im(rho).

namespace subq::oracle {

using rings::FpMatrix;
using rings::IntMatrix;

/// Invariant factors d1 | d2 | ... with unit factors dropped; free summands
/// are trailing zeros.
struct InvariantFactors {
  std::vector<mpz_class> factors;

  std::size_t free_rank() const;
  bool is_zero() const { return factors.empty(); }
  /// e.g. `Z^2 + Z/2 + Z/6`, or `0`.
  std::string format() const;
  friend bool operator==(const InvariantFactors& a, const InvariantFactors& b) { return a.factors == b.factors; }
};

/// Invariants of Z^n / (row space of rel), rel having n columns.
InvariantFactors quotient_invariants(const IntMatrix& rel);

/// Row basis of the lattice {s : s*gamma in im(rho)}.
IntMatrix relation_lattice(const IntMatrix& gamma, const IntMatrix& rho);

InvariantFactors evaluate(const IntMatrix& gamma, const IntMatrix& rho);

/// True iff alpha*gamma_b lies row-wise in im(rho_b).
bool induced_is_zero(const IntMatrix& alpha, const IntMatrix& gamma_b, const IntMatrix& rho_b);

/// Invariants of image, cokernel and kernel of the homomorphism
/// Z^a/S_x -> Z^b/S_y, v |-> v*alpha.
struct InducedMapInvariants {
  InvariantFactors kernel;
  InvariantFactors image;
  InvariantFactors cokernel;
};

InducedMapInvariants induced_map_invariants(const IntMatrix& alpha, const IntMatrix& gamma_x, const IntMatrix& rho_x,
                                            const IntMatrix& gamma_y, const IntMatrix& rho_y);

/// Invariants of ker(d1)/im(d2) for integer matrices with d2*d1 = 0.
InvariantFactors homology_invariants(const IntMatrix& d2, const IntMatrix& d1);

/// Dimension of im(gamma) / (im(gamma) cap im(rho)) over GF(p).
std::size_t dimension(const FpMatrix& gamma, const FpMatrix& rho);

}  // namespace subq::oracle
