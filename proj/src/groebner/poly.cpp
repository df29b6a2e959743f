#include "subq/groebner/poly.hpp"

#include <algorithm>
#include <cctype>

#include "subq/errors.hpp"

namespace subq::groebner {

namespace {
bool term_greater(const Term& a, const Term& b) { return compare_degrevlex(a.mono, b.mono) > 0; }
}  // namespace

Poly Poly::constant(PrimeField field, std::uint32_t c) { return monomial(field, Monomial(), c); }

Poly Poly::monomial(PrimeField field, Monomial m, std::uint32_t c) {
  Poly p(field);
  c %= field.characteristic();
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(PrimeField field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p(field);
  for (auto& t : terms) {
    t.coeff %= field.characteristic();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

unsigned Poly::max_x_index() const {
  unsigned n = 0;
  for (const auto& t : terms_) n = std::max(n, t.mono.max_x_index());
  return n;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Poly Poly::operator-() const {
  Poly r(field_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r.sub_mul_term(b, Monomial(), a.field_.neg(1));
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r.sub_mul_term(b, Monomial(), 1);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw BackendMismatch("polynomial product over different fields");
  Poly r(a.field_);
  for (const auto& t : b.terms_) r.sub_mul_term(a, t.mono, a.field_.neg(t.coeff));
  return r;
}

Poly Poly::scaled(std::uint32_t c) const { return times_term(Monomial(), c); }

Poly Poly::times_term(const Monomial& m, std::uint32_t c) const {
  Poly r(field_);
  c %= field_.characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
  return r;
}

void Poly::sub_mul_term(const Poly& g, const Monomial& m, std::uint32_t c) {
  if (!(field_ == g.field_)) throw BackendMismatch("polynomial arithmetic over different fields");
  if (c == 0 || g.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  const bool trivial = m.is_one();
  while (i != terms_.end() || j != g.terms_.end()) {
    if (j == g.terms_.end()) {
      out.push_back(std::move(*i++));
      continue;
    }
    Monomial gm = trivial ? j->mono : j->mono * m;
    if (i == terms_.end()) {
      out.push_back({std::move(gm), field_.neg(field_.mul(c, j->coeff))});
      ++j;
      continue;
    }
    int cmp = compare_degrevlex(i->mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(*i++));
    } else if (cmp < 0) {
      out.push_back({std::move(gm), field_.neg(field_.mul(c, j->coeff))});
      ++j;
    } else {
      auto v = field_.sub(i->coeff, field_.mul(c, j->coeff));
      if (v != 0) out.push_back({std::move(i->mono), v});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Poly Poly::x_part() const {
  Poly r(field_);
  for (const auto& t : terms_)
    if (t.mono.z_exponent() == 0) r.terms_.push_back(t);
  return r;
}

Poly Poly::z_part() const {
  Poly r(field_);
  for (const auto& t : terms_)
    if (t.mono.z_exponent() > 0 && !t.mono.has_x()) r.terms_.push_back(t);
  return r;
}

Poly Poly::without_mixed_monomials() const {
  Poly r(field_);
  for (const auto& t : terms_)
    if (!t.mono.mixes_z_and_x()) r.terms_.push_back(t);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].coeff != b.terms_[k].coeff || !(a.terms_[k].mono == b.terms_[k].mono)) return false;
  return true;
}

std::string Poly::format() const {
  if (terms_.empty()) return "0";
  const auto p = field_.characteristic();
  std::string out;
  for (const auto& t : terms_) {
    // Symmetric representative: coefficients above p/2 print as negatives.
    bool negative = t.coeff > p / 2;
    std::uint32_t mag = negative ? p - t.coeff : t.coeff;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (t.mono.is_one()) out += std::to_string(mag);
    else if (mag == 1) out += t.mono.format();
    else out += std::to_string(mag) + "*" + t.mono.format();
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(PrimeField field, std::string_view text) : field_(field), text_(text) {}

  Poly run() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = text_[pos_++] == '-';
    for (;;) {
      Term t = term();
      if (negative) t.coeff = field_.neg(t.coeff);
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_++];
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      negative = c == '-';
    }
    return Poly::from_terms(field_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad polynomial '" + std::string(text_) + "': " + what);
  }

  std::uint64_t number() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    const std::uint64_t p = field_.characteristic();
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = (v * 10 + std::uint64_t(text_[pos_++] - '0')) % p;
    return v;
  }

  std::uint32_t exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + std::uint64_t(text_[pos_++] - '0');
      if (v > 100000) fail("exponent too large");
    }
    return std::uint32_t(v);
  }

  Term term() {
    std::uint32_t coeff = 1;
    Monomial mono;
    for (;;) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = field_.mul(coeff, std::uint32_t(number()));
      } else if (c == 'z') {
        ++pos_;
        mono = mono * Monomial::z(exponent());
      } else if (c == 'x') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("variable x needs an index");
        std::uint64_t idx = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          idx = idx * 10 + std::uint64_t(text_[pos_++] - '0');
          if (idx > 10000) fail("variable index too large");
        }
        if (idx == 0) fail("variable indices start at 1");
        mono = mono * Monomial::x(unsigned(idx), exponent());
      } else {
        fail("expected a number or a variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {std::move(mono), coeff};
  }

  PrimeField field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(PrimeField field, std::string_view text) { return PolyParser(field, text).run(); }

}  // namespace subq::groebner
