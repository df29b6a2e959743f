#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subq/groebner/poly.hpp"
#include "subq/rings/matrix.hpp"

namespace subq::groebner {

using PolyMatrix = rings::Matrix<PolynomialRing>;

/// Element of the free module S^{1 x rank}, stored densely by component.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(PrimeField field, std::size_t rank) : comps_(rank, Poly(field)), field_(field) {}
  ModuleElement(PrimeField field, std::vector<Poly> comps) : comps_(std::move(comps)), field_(field) {}

  /// Row `row` of `m` as an element of S^{1 x m.cols()}.
  static ModuleElement from_row(const PolyMatrix& m, std::size_t row);
  /// The unit vector e_index scaled by `p`.
  static ModuleElement unit(PrimeField field, std::size_t rank, std::size_t index, const Poly& p);

  std::size_t rank() const { return comps_.size(); }
  const PrimeField& field() const { return field_; }
  const Poly& operator[](std::size_t i) const { return comps_[i]; }
  Poly& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Poly>& components() const { return comps_; }

  /// (index, polynomial) for the nonzero components, by increasing index.
  std::vector<std::pair<std::size_t, Poly>> nonzero_components() const;

  bool is_zero() const;
  /// Components [begin, end) as an element of rank end - begin.
  ModuleElement slice(std::size_t begin, std::size_t end) const;

  ModuleElement scaled(std::uint32_t c) const;
  ModuleElement times(const Poly& p) const;
  /// *this -= c * m * g
  void sub_mul_term(const ModuleElement& g, const Monomial& m, std::uint32_t c);

  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

  std::string format() const;

 private:
  std::vector<Poly> comps_;
  PrimeField field_{};
};

/// Module term order. Components below `split` form the dominant block F;
/// the rest form the block E, and every term of F is greater than every term
/// of E. Inside a block: degrevlex on the monomial, then smaller component
/// index first.
struct ModuleOrder {
  std::size_t split = std::numeric_limits<std::size_t>::max();

  static ModuleOrder plain() { return {}; }
  static ModuleOrder elimination(std::size_t f_rank) { return {f_rank}; }

  bool in_dominant_block(std::size_t comp) const { return comp < split; }
  int compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const;
  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;
};

struct LeadingTerm {
  Monomial mono;
  std::size_t comp = 0;
  std::uint32_t coeff = 0;
};

std::optional<LeadingTerm> leading_term(const ModuleElement& f, const ModuleOrder& order);

struct GroebnerBasis {
  std::vector<ModuleElement> elements;  // reduced, monic, sorted by leading term
  ModuleOrder order;
  std::vector<ModuleElement> generators;
  std::size_t rank = 0;
  PrimeField field{};
};

/// Reduced Groebner basis of the submodule generated by `gens` (Buchberger
/// with the chain criterion, normal pair selection).
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, ModuleOrder order = ModuleOrder::plain());

struct NormalForm {
  ModuleElement remainder;
  std::vector<Poly> coefficients;  // one per basis element
};

/// Full division of f by the basis elements: f = sum c_i * g_i + remainder,
/// no term of the remainder divisible by a leading term of the basis.
NormalForm normal_form(const ModuleElement& f, const std::vector<ModuleElement>& basis, const ModuleOrder& order);
inline NormalForm normal_form(const ModuleElement& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.elements, gb.order);
}

/// S-vector of a and b; nothing when their leading terms sit in different components.
std::optional<ModuleElement> s_vector(const ModuleElement& a, const ModuleElement& b, const ModuleOrder& order);

/// Every S-vector of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

bool is_member(const ModuleElement& f, const GroebnerBasis& gb);

/// Generators of {s : s*A = 0} over GF(p)[x, z] for A of size m x n; each
/// generator has rank m.
std::vector<ModuleElement> module_syzygies(const PolyMatrix& a);

/// Row syzygies of A over R_n = k[x1..xn, z]/<x1 z, ..., xn z>. Entries of A
/// are taken as representatives in canonical form; results are canonical.
std::vector<ModuleElement> rn_row_syzygies(const PolyMatrix& a, unsigned n);

/// Decides lifts X*A = B over R_n for many right-hand sides against one A.
class RnLiftSolver {
 public:
  RnLiftSolver(const PolyMatrix& a, unsigned n);

  /// x (rank rows(A)) with x*A = b in R_n, or nothing.
  std::optional<ModuleElement> solve(const ModuleElement& b) const;
  unsigned cutoff() const { return n_; }

 private:
  std::size_t rows_, cols_;
  unsigned n_;
  PrimeField field_;
  GroebnerBasis gb_;
};

std::optional<PolyMatrix> rn_decide_lift(const PolyMatrix& a, const PolyMatrix& b, unsigned n);

/// Rows of a matrix from module elements of equal rank.
PolyMatrix to_matrix(const PolynomialRing& ring, const std::vector<ModuleElement>& rows, std::size_t rank);

}  // namespace subq::groebner
