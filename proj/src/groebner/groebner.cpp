#include "subq/groebner/groebner.hpp"

#include <algorithm>

#include "subq/errors.hpp"

namespace subq::groebner {

// ---------------------------------------------------------------------------
// ModuleElement

ModuleElement ModuleElement::from_row(const PolyMatrix& m, std::size_t row) {
  std::vector<Poly> comps;
  comps.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) comps.push_back(m(row, j));
  return ModuleElement(m.ring().field(), std::move(comps));
}

ModuleElement ModuleElement::unit(PrimeField field, std::size_t rank, std::size_t index, const Poly& p) {
  ModuleElement e(field, rank);
  e.comps_.at(index) = p;
  return e;
}

std::vector<std::pair<std::size_t, Poly>> ModuleElement::nonzero_components() const {
  std::vector<std::pair<std::size_t, Poly>> out;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) out.emplace_back(i, comps_[i]);
  return out;
}

bool ModuleElement::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

ModuleElement ModuleElement::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > comps_.size()) throw DimensionError("module element slice out of range");
  return ModuleElement(field_, std::vector<Poly>(comps_.begin() + std::ptrdiff_t(begin),
                                                 comps_.begin() + std::ptrdiff_t(end)));
}

ModuleElement ModuleElement::scaled(std::uint32_t c) const {
  ModuleElement r(field_, rank());
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i].scaled(c);
  return r;
}

ModuleElement ModuleElement::times(const Poly& p) const {
  ModuleElement r(field_, rank());
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] * p;
  return r;
}

void ModuleElement::sub_mul_term(const ModuleElement& g, const Monomial& m, std::uint32_t c) {
  if (g.rank() != rank()) throw DimensionError("module elements of different rank");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i].sub_mul_term(g.comps_[i], m, c);
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement r = a;
  r.sub_mul_term(b, Monomial(), a.field_.neg(1));
  return r;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement r = a;
  r.sub_mul_term(b, Monomial(), 1);
  return r;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.comps_ == b.comps_; }

std::string ModuleElement::format() const {
  std::string out = "[";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ",";
    out += comps_[i].format();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Orders and leading terms

int ModuleOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const {
  const bool fa = in_dominant_block(ca), fb = in_dominant_block(cb);
  if (fa != fb) return fa ? 1 : -1;
  if (int c = compare_degrevlex(a, b)) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

std::optional<LeadingTerm> leading_term(const ModuleElement& f, const ModuleOrder& order) {
  std::optional<LeadingTerm> best;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (f[i].is_zero()) continue;
    const Term& t = f[i].leading_term();
    if (!best || order.compare(t.mono, i, best->mono, best->comp) > 0) best = LeadingTerm{t.mono, i, t.coeff};
  }
  return best;
}

namespace {

struct Reducer {
  const std::vector<ModuleElement>& basis;
  const std::vector<LeadingTerm>& lts;
  const ModuleOrder& order;

  std::optional<std::size_t> find_divisor(const LeadingTerm& lt, std::optional<std::size_t> skip = {}) const {
    for (std::size_t k = 0; k < lts.size(); ++k)
      if (k != skip && lts[k].comp == lt.comp && lts[k].mono.divides(lt.mono)) return k;
    return std::nullopt;
  }

  // Full reduction; `coeffs` collects the quotients when non-null.
  ModuleElement reduce(ModuleElement f, std::vector<Poly>* coeffs, std::optional<std::size_t> skip = {}) const {
    const PrimeField& field = f.field();
    ModuleElement rem(field, f.rank());
    while (auto lt = leading_term(f, order)) {
      if (auto k = find_divisor(*lt, skip)) {
        const Monomial q = quotient(lt->mono, lts[*k].mono);
        const std::uint32_t c = field.mul(lt->coeff, field.inverse(lts[*k].coeff));
        f.sub_mul_term(basis[*k], q, c);
        if (coeffs) (*coeffs)[*k] += Poly::monomial(field, q, c);
      } else {
        const Poly head = Poly::monomial(field, lt->mono, lt->coeff);
        f[lt->comp] -= head;
        rem[lt->comp] += head;
      }
    }
    return rem;
  }
};

std::vector<LeadingTerm> leading_terms(const std::vector<ModuleElement>& basis, const ModuleOrder& order) {
  std::vector<LeadingTerm> lts;
  lts.reserve(basis.size());
  for (const auto& g : basis) lts.push_back(*leading_term(g, order));
  return lts;
}

ModuleElement make_monic(const ModuleElement& f, const ModuleOrder& order) {
  auto lt = leading_term(f, order);
  if (!lt || lt->coeff == 1) return f;
  return f.scaled(f.field().inverse(lt->coeff));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::size_t comp;
};

}  // namespace

NormalForm normal_form(const ModuleElement& f, const std::vector<ModuleElement>& basis, const ModuleOrder& order) {
  const auto lts = leading_terms(basis, order);
  std::vector<Poly> coeffs(basis.size(), Poly(f.field()));
  Reducer red{basis, lts, order};
  ModuleElement rem = red.reduce(f, &coeffs);
  return {std::move(rem), std::move(coeffs)};
}

std::optional<ModuleElement> s_vector(const ModuleElement& a, const ModuleElement& b, const ModuleOrder& order) {
  auto la = leading_term(a, order), lb = leading_term(b, order);
  if (!la || !lb || la->comp != lb->comp) return std::nullopt;
  const PrimeField& field = a.field();
  const Monomial l = lcm(la->mono, lb->mono);
  ModuleElement s(field, a.rank());
  s.sub_mul_term(a, quotient(l, la->mono), field.neg(field.inverse(la->coeff)));
  s.sub_mul_term(b, quotient(l, lb->mono), field.inverse(lb->coeff));
  return s;
}

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, ModuleOrder order) {
  GroebnerBasis gb;
  gb.order = order;
  gb.generators = gens;
  gb.rank = gens.empty() ? 0 : gens.front().rank();
  gb.field = gens.empty() ? PrimeField() : gens.front().field();
  for (const auto& g : gens)
    if (g.rank() != gb.rank || !(g.field() == gb.field)) throw DimensionError("buchberger: inconsistent generators");

  std::vector<ModuleElement> basis;
  std::vector<LeadingTerm> lts;
  std::vector<Pair> pairs;
  // Pending-pair lookup for the chain criterion.
  std::vector<std::vector<char>> pending;

  auto add_element = [&](ModuleElement g) {
    g = make_monic(g, order);
    const LeadingTerm lt = *leading_term(g, order);
    const std::size_t k = basis.size();
    basis.push_back(std::move(g));
    lts.push_back(lt);
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (lts[i].comp != lt.comp) continue;
      pairs.push_back({i, k, lcm(lts[i].mono, lt.mono), lt.comp});
      pending[i][k] = pending[k][i] = 1;
    }
  };

  {
    Reducer red{basis, lts, order};
    for (const auto& g : gens) {
      auto r = red.reduce(g, nullptr);
      if (!r.is_zero()) add_element(std::move(r));
    }
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return order.compare(a.lcm, a.comp, b.lcm, b.comp) < 0;
    });
    const Pair p = *it;
    pairs.erase(it);
    pending[p.i][p.j] = pending[p.j][p.i] = 0;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j || lts[k].comp != p.comp) continue;
      chain = lts[k].mono.divides(p.lcm) && !pending[p.i][k] && !pending[p.j][k];
    }
    if (chain) continue;

    auto s = s_vector(basis[p.i], basis[p.j], order);
    Reducer red{basis, lts, order};
    auto r = red.reduce(std::move(*s), nullptr);
    if (!r.is_zero()) add_element(std::move(r));
  }

  // Minimalize, then tail-reduce.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(lts[a].mono, lts[a].comp, lts[b].mono, lts[b].comp) < 0;
  });
  std::vector<ModuleElement> minimal;
  std::vector<LeadingTerm> min_lts;
  for (std::size_t k : idx) {
    bool redundant = std::any_of(min_lts.begin(), min_lts.end(), [&](const LeadingTerm& m) {
      return m.comp == lts[k].comp && m.mono.divides(lts[k].mono);
    });
    if (redundant) continue;
    minimal.push_back(basis[k]);
    min_lts.push_back(lts[k]);
  }
  Reducer red{minimal, min_lts, order};
  gb.elements.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) gb.elements.push_back(make_monic(red.reduce(minimal[k], nullptr, k), order));
  return gb;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      auto s = s_vector(gb.elements[i], gb.elements[j], gb.order);
      if (s && !normal_form(*s, gb).remainder.is_zero()) return false;
    }
  return true;
}

bool is_member(const ModuleElement& f, const GroebnerBasis& gb) { return normal_form(f, gb).remainder.is_zero(); }

// ---------------------------------------------------------------------------
// Syzygies and lifts

namespace {

// Generators (A_i, e_i) of rank cols + rows, plus (x_j z e_c, 0) for j <= n.
std::vector<ModuleElement> graph_generators(const PolyMatrix& a, unsigned n) {
  const PrimeField field = a.ring().field();
  const std::size_t m = a.rows(), c = a.cols();
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < m; ++i) {
    ModuleElement g(field, c + m);
    for (std::size_t j = 0; j < c; ++j) g[j] = a(i, j);
    g[c + i] = Poly::constant(field, 1);
    gens.push_back(std::move(g));
  }
  for (unsigned j = 1; j <= n; ++j)
    for (std::size_t col = 0; col < c; ++col)
      gens.push_back(ModuleElement::unit(field, c + m, col, Poly::monomial(field, Monomial::x(j) * Monomial::z())));
  return gens;
}

std::vector<ModuleElement> harvest(const GroebnerBasis& gb, std::size_t f_rank) {
  std::vector<ModuleElement> out;
  for (const auto& g : gb.elements) {
    auto lt = leading_term(g, gb.order);
    if (lt && !gb.order.in_dominant_block(lt->comp)) out.push_back(g.slice(f_rank, g.rank()));
  }
  return out;
}

ModuleElement canonical_mod_relations(const ModuleElement& e) {
  ModuleElement r(e.field(), e.rank());
  for (std::size_t i = 0; i < e.rank(); ++i) r[i] = e[i].without_mixed_monomials();
  return r;
}

}  // namespace

std::vector<ModuleElement> module_syzygies(const PolyMatrix& a) {
  if (a.rows() == 0) return {};
  auto gb = buchberger(graph_generators(a, 0), ModuleOrder::elimination(a.cols()));
  return harvest(gb, a.cols());
}

std::vector<ModuleElement> rn_row_syzygies(const PolyMatrix& a, unsigned n) {
  if (a.rows() == 0) return {};
  auto gb = buchberger(graph_generators(a, n), ModuleOrder::elimination(a.cols()));
  std::vector<ModuleElement> out;
  for (auto& s : harvest(gb, a.cols())) {
    auto c = make_monic(canonical_mod_relations(s), ModuleOrder::plain());
    if (c.is_zero() || std::find(out.begin(), out.end(), c) != out.end()) continue;
    out.push_back(std::move(c));
  }
  return out;
}

RnLiftSolver::RnLiftSolver(const PolyMatrix& a, unsigned n)
    : rows_(a.rows()), cols_(a.cols()), n_(n), field_(a.ring().field()) {
  gb_ = buchberger(graph_generators(a, n), ModuleOrder::elimination(cols_));
  gb_.rank = cols_ + rows_;
  gb_.field = field_;
}

std::optional<ModuleElement> RnLiftSolver::solve(const ModuleElement& b) const {
  if (b.rank() != cols_) throw DimensionError("lift: right-hand side has the wrong rank");
  ModuleElement f(field_, cols_ + rows_);
  for (std::size_t j = 0; j < cols_; ++j) f[j] = b[j];
  auto rem = normal_form(f, gb_).remainder;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!rem[j].is_zero()) return std::nullopt;
  ModuleElement x(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) x[i] = (-rem[cols_ + i]).without_mixed_monomials();
  return x;
}

std::optional<PolyMatrix> rn_decide_lift(const PolyMatrix& a, const PolyMatrix& b, unsigned n) {
  rings::detail::require_same_ring(a, b, "decide_lift");
  if (a.cols() != b.cols()) throw DimensionError("decide_lift: column counts differ");
  RnLiftSolver solver(a, n);
  PolyMatrix x(a.ring(), b.rows(), a.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    auto xr = solver.solve(ModuleElement::from_row(b, r));
    if (!xr) return std::nullopt;
    for (std::size_t k = 0; k < a.rows(); ++k) x(r, k) = (*xr)[k];
  }
  return x;
}

PolyMatrix to_matrix(const PolynomialRing& ring, const std::vector<ModuleElement>& rows, std::size_t rank) {
  PolyMatrix m(ring, rows.size(), rank);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rank() != rank) throw DimensionError("to_matrix: element of wrong rank");
    for (std::size_t j = 0; j < rank; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace subq::groebner
