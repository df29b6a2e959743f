#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace subq::rings {

/// The ring of integers with arbitrary-precision elements.
class IntegerRing {
 public:
  using Element = mpz_class;
  static constexpr bool kFiniteSyzygies = true;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const { return v; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  /// a / b when b divides a exactly, nothing otherwise (b == 0 divides only 0).
  std::optional<Element> divide_exact(const Element& a, const Element& b) const;

  std::string format(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view text) const;
  std::string name() const { return "Z"; }

  bool operator==(const IntegerRing&) const = default;
};

}  // namespace subq::rings
