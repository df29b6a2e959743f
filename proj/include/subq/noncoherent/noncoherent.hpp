#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subq/addcat/cospan.hpp"
#include "subq/groebner/groebner.hpp"

namespace subq::noncoherent {

using groebner::Poly;
using groebner::PolyMatrix;
using rings::PrimeField;

/// Element of R = k[x_i, z | i >= 1] / <x_i z>, stored as the unique
/// representative without monomials mixing z and some x_i. Every element
/// splits as p = p_x + p_z with p_x free of z and p_z in z*k[z].
class RElement {
 public:
  RElement() = default;
  explicit RElement(PrimeField field) : poly_(field) {}

  /// Canonical form of an arbitrary polynomial.
  static RElement normalize(const Poly& p) { return RElement(p.without_mixed_monomials(), 0); }

  const Poly& poly() const { return poly_; }
  const PrimeField& field() const { return poly_.field(); }
  Poly p_x() const { return poly_.x_part(); }
  Poly p_z() const { return poly_.z_part(); }
  bool is_zero() const { return poly_.is_zero(); }
  unsigned max_x_index() const { return poly_.max_x_index(); }

  friend RElement operator+(const RElement& a, const RElement& b) { return RElement(a.poly_ + b.poly_, 0); }
  friend RElement operator-(const RElement& a, const RElement& b) { return RElement(a.poly_ - b.poly_, 0); }
  friend RElement operator*(const RElement& a, const RElement& b) { return normalize(a.poly_ * b.poly_); }
  RElement operator-() const { return RElement(-poly_, 0); }
  friend bool operator==(const RElement& a, const RElement& b) { return a.poly_ == b.poly_; }

  std::string format() const { return poly_.format(); }

 private:
  RElement(Poly p, int) : poly_(std::move(p)) {}
  Poly poly_;
};

inline RElement r_normalize(const Poly& p) { return RElement::normalize(p); }

/// R as a ring backend. Row syzygies over R need not be finitely generated,
/// so Q(P)-operations that require weak kernels are unavailable here.
class NoncoherentRing {
 public:
  using Element = RElement;
  static constexpr bool kFiniteSyzygies = false;

  explicit NoncoherentRing(PrimeField field = PrimeField()) : field_(field) {}
  const PrimeField& field() const { return field_; }

  Element zero() const { return RElement(field_); }
  Element one() const { return r_normalize(Poly::constant(field_, 1)); }
  Element from_int(long long v) const { return r_normalize(Poly::constant(field_, field_.from_int(v))); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const { return a.format(); }
  Element parse(std::string_view text) const { return r_normalize(Poly::parse(field_, text)); }
  std::string name() const { return "NC(" + std::to_string(field_.characteristic()) + ")"; }
  bool operator==(const NoncoherentRing&) const = default;

 private:
  PrimeField field_;
};

using RMatrix = rings::Matrix<NoncoherentRing>;
using RCospan = addcat::Cospan<NoncoherentRing>;

PolyMatrix to_poly_matrix(const RMatrix& m);
RMatrix from_poly_matrix(const NoncoherentRing& ring, const PolyMatrix& m);

/// Largest x-index occurring in the matrices, at least 1.
unsigned min_cutoff(std::initializer_list<std::reference_wrapper<const RMatrix>> matrices);

/// Finite description of the row kernel of gamma over R: with n the cutoff,
///   ker_R(gamma) = <sigma rows> + sum_{i > n} x_i * <tau rows>,
/// where sigma generates the kernel over R_n and tau the kernel of the
/// x-part of gamma over k[x_1..x_n].
struct SyzygyGenerators {
  unsigned n = 1;
  RMatrix sigma;
  RMatrix tau;
  std::size_t d() const { return sigma.rows(); }
  std::size_t e() const { return tau.rows(); }
};

SyzygyGenerators kernel_generators(const RMatrix& gamma);
/// Same with an explicit cutoff n >= min_cutoff({gamma}).
SyzygyGenerators kernel_generators(const RMatrix& gamma, unsigned n);

/// X with X*A = B over R, decided over R_n for n = min_cutoff({A, B}).
std::optional<RMatrix> decide_lift_R(const RMatrix& a, const RMatrix& b);
inline std::optional<RMatrix> decide_lift(const RMatrix& a, const RMatrix& b) { return decide_lift_R(a, b); }

/// Decides Syz(first) inside Syz(second) over R. The counterexample of a
/// "no" answer is a row over A+C (the first object of the simplified pair).
addcat::InclusionDecision<NoncoherentRing> syzygy_inclusion_R(const RCospan& first, const RCospan& second);
inline addcat::InclusionDecision<NoncoherentRing> syzygy_inclusion(const RCospan& first, const RCospan& second) {
  return syzygy_inclusion_R(first, second);
}

}  // namespace subq::noncoherent
