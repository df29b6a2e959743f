#include <cctype>
#include <string>

#include "subq/errors.hpp"
#include "subq/rings/integer_ring.hpp"
#include "subq/rings/prime_field.hpp"

namespace subq::rings {

namespace {
bool is_integer_literal(std::string_view text) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}
}  // namespace

std::optional<mpz_class> IntegerRing::divide_exact(const mpz_class& a, const mpz_class& b) const {
  if (sgn(b) == 0) {
    if (sgn(a) == 0) return mpz_class(0);
    return std::nullopt;
  }
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class IntegerRing::parse(std::string_view text) const {
  if (!is_integer_literal(text)) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  if (text[0] == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw PreconditionError("inverse of zero modulo " + std::to_string(p));
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return std::uint32_t(t);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw PreconditionError("GF(p) requires p < 2^31, got " + std::to_string(p));
  if (!is_prime(p)) throw PreconditionError("GF(p) requires a prime, got " + std::to_string(p));
}

PrimeField::Element PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Element(r);
}

std::optional<PrimeField::Element> PrimeField::divide_exact(Element a, Element b) const {
  if (b == 0) {
    if (a == 0) return Element(0);
    return std::nullopt;
  }
  return mul(a, inverse(b));
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
  if (!is_integer_literal(text)) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  if (text[0] == '+') text.remove_prefix(1);
  mpz_class v(std::string(text), 10);
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Element(r.get_ui());
}

}  // namespace subq::rings
