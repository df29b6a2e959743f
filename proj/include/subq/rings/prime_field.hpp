#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace subq::rings {

bool is_prime(std::uint64_t n);

/// Multiplicative inverse of a nonzero residue modulo the prime p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// The prime field GF(p). Elements are residues kept in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool kFiniteSyzygies = true;
  static constexpr std::uint32_t kDefaultPrime = 101;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const;

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return Element(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : Element(std::uint64_t(a) + p_ - b); }
  Element mul(Element a, Element b) const { return Element(std::uint64_t(a) * b % p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inverse(Element a) const { return inverse_mod(a, p_); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  std::optional<Element> divide_exact(Element a, Element b) const;

  std::string format(Element a) const { return std::to_string(a); }
  Element parse(std::string_view text) const;
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace subq::rings
