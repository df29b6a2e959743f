#include "subq/groebner/monomial.hpp"

#include <algorithm>

namespace subq::groebner {

Monomial::Monomial(std::vector<std::uint32_t> x_exponents, std::uint32_t z_exponent)
    : x_(std::move(x_exponents)), z_(z_exponent) {
  trim();
}

Monomial Monomial::x(unsigned index, std::uint32_t exponent) {
  std::vector<std::uint32_t> e(index, 0);
  if (index >= 1) e[index - 1] = exponent;
  return Monomial(std::move(e), 0);
}

Monomial Monomial::z(std::uint32_t exponent) { return Monomial({}, exponent); }

void Monomial::trim() {
  while (!x_.empty() && x_.back() == 0) x_.pop_back();
  degree_ = z_;
  for (auto e : x_) degree_ += e;
}

bool Monomial::divides(const Monomial& other) const {
  if (z_ > other.z_ || degree_ > other.degree_ || x_.size() > other.x_.size()) return false;
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] > other.x_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(std::max(a.x_.size(), b.x_.size()), 0);
  for (std::size_t i = 0; i < a.x_.size(); ++i) e[i] += a.x_[i];
  for (std::size_t i = 0; i < b.x_.size(); ++i) e[i] += b.x_[i];
  return Monomial(std::move(e), a.z_ + b.z_);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(std::max(a.x_.size(), b.x_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(i < a.x_.size() ? a.x_[i] : 0u, i < b.x_.size() ? b.x_[i] : 0u);
  return Monomial(std::move(e), std::max(a.z_, b.z_));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.x_);
  for (std::size_t i = 0; i < b.x_.size(); ++i) e[i] -= b.x_[i];
  return Monomial(std::move(e), a.z_ - b.z_);
}

std::string Monomial::format() const {
  std::string out;
  auto factor = [&](const std::string& var, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < x_.size(); ++i) factor("x" + std::to_string(i + 1), x_[i]);
  factor("z", z_);
  return out.empty() ? "1" : out;
}

int compare_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  // Last variable first: z, then x_k, ..., x_1; a smaller exponent wins.
  if (a.z_exponent() != b.z_exponent()) return a.z_exponent() < b.z_exponent() ? 1 : -1;
  for (unsigned i = std::max(a.max_x_index(), b.max_x_index()); i >= 1; --i) {
    auto ea = a.x_exponent(i), eb = b.x_exponent(i);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

}  // namespace subq::groebner
