#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subq::groebner {

/// Power product x1^a1 * ... * xk^ak * z^c. The x-support grows on demand, so
/// the same type serves k[x1..xm, z] and the ring with infinitely many x's.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<std::uint32_t> x_exponents, std::uint32_t z_exponent);

  /// x_index^exponent (index is 1-based).
  static Monomial x(unsigned index, std::uint32_t exponent = 1);
  static Monomial z(std::uint32_t exponent = 1);

  std::uint32_t x_exponent(unsigned index) const {
    return index >= 1 && index <= x_.size() ? x_[index - 1] : 0;
  }
  std::uint32_t z_exponent() const { return z_; }
  std::uint32_t degree() const { return degree_; }
  /// Largest i with x_i occurring, 0 when there is none.
  unsigned max_x_index() const { return unsigned(x_.size()); }
  bool is_one() const { return degree_ == 0; }
  bool has_x() const { return !x_.empty(); }
  /// Contains z together with some x_i, i.e. vanishes modulo the x_i*z.
  bool mixes_z_and_x() const { return z_ > 0 && !x_.empty(); }

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  /// a / b, assuming b divides a.
  friend Monomial quotient(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string format() const;

 private:
  void trim();

  std::vector<std::uint32_t> x_;  // no trailing zeros
  std::uint32_t z_ = 0;
  std::uint32_t degree_ = 0;
};

/// Degree reverse lexicographic order with x1 > x2 > ... > z. Returns
/// >0, 0, <0 as a is greater, equal, smaller than b.
int compare_degrevlex(const Monomial& a, const Monomial& b);

}  // namespace subq::groebner
