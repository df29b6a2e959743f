#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subq/groebner/monomial.hpp"
#include "subq/rings/prime_field.hpp"

namespace subq::groebner {

using rings::PrimeField;

struct Term {
  Monomial mono;
  std::uint32_t coeff;
};

/// Polynomial over GF(p) in x1, x2, ... and z. Terms are stored strictly
/// descending in degrevlex with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(PrimeField field) : field_(field) {}

  static Poly constant(PrimeField field, std::uint32_t c);
  static Poly monomial(PrimeField field, Monomial m, std::uint32_t c = 1);
  /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(PrimeField field, std::vector<Term> terms);

  const PrimeField& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  unsigned max_x_index() const;
  std::uint32_t total_degree() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  Poly scaled(std::uint32_t c) const;
  Poly times_term(const Monomial& m, std::uint32_t c) const;
  /// *this -= c * m * g
  void sub_mul_term(const Poly& g, const Monomial& m, std::uint32_t c);

  /// The terms free of z (constant included).
  Poly x_part() const;
  /// The terms that are pure positive powers of z.
  Poly z_part() const;
  /// Drops every monomial containing z together with some x_i.
  Poly without_mixed_monomials() const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string format() const;
  /// `3*x1^2*x2 + z^3 - 1`; coefficients are reduced mod p.
  static Poly parse(PrimeField field, std::string_view text);

 private:
  PrimeField field_{};
  std::vector<Term> terms_;
};

/// Polynomials over GF(p) as a ring backend for Matrix<>.
class PolynomialRing {
 public:
  using Element = Poly;
  static constexpr bool kFiniteSyzygies = false;

  explicit PolynomialRing(PrimeField field = PrimeField()) : field_(field) {}
  const PrimeField& field() const { return field_; }

  Element zero() const { return Poly(field_); }
  Element one() const { return Poly::constant(field_, 1); }
  Element from_int(long long v) const { return Poly::constant(field_, field_.from_int(v)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const { return a.format(); }
  Element parse(std::string_view text) const { return Poly::parse(field_, text); }
  std::string name() const { return "GF(" + std::to_string(field_.characteristic()) + ")[x,z]"; }
  bool operator==(const PolynomialRing&) const = default;

 private:
  PrimeField field_;
};

}  // namespace subq::groebner
