#include "subq/oracle/oracle.hpp"

#include "subq/errors.hpp"

namespace subq::oracle {

namespace {

IntMatrix nonzero_rows(const rings::EchelonForm<rings::IntegerRing>& ef) { return ef.h.row_block(0, ef.rank); }

// Kernel lattice {l : l*a = 0} as a row basis, from the unimodular transform.
IntMatrix left_kernel(const IntMatrix& a) {
  const auto ef = rings::hermite_normal_form(a);
  return ef.u.row_block(ef.rank, a.rows());
}

// y with y*h = b for the nonzero rows h of a Hermite form, or false.
bool solve_in_hermite(const rings::EchelonForm<rings::IntegerRing>& ef, std::vector<mpz_class> b,
                      std::vector<mpz_class>* y) {
  if (y) y->assign(ef.rank, 0);
  for (std::size_t i = 0; i < ef.rank; ++i) {
    const std::size_t pc = ef.pivots[i];
    for (std::size_t j = 0; j < pc; ++j)
      if (sgn(b[j]) != 0) return false;
    if (sgn(b[pc]) == 0) continue;
    if (!mpz_divisible_p(b[pc].get_mpz_t(), ef.h(i, pc).get_mpz_t())) return false;
    mpz_class q = b[pc] / ef.h(i, pc);
    if (y) (*y)[i] = q;
    for (std::size_t j = pc; j < b.size(); ++j) b[j] -= q * ef.h(i, j);
  }
  for (const auto& v : b)
    if (sgn(v) != 0) return false;
  return true;
}

std::vector<mpz_class> row_of(const IntMatrix& m, std::size_t i) {
  std::vector<mpz_class> r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
  return r;
}

}  // namespace

std::size_t InvariantFactors::free_rank() const {
  std::size_t n = 0;
  for (const auto& f : factors)
    if (sgn(f) == 0) ++n;
  return n;
}

std::string InvariantFactors::format() const {
  if (factors.empty()) return "0";
  std::string out;
  const std::size_t frees = free_rank();
  if (frees) out = frees == 1 ? "Z" : "Z^" + std::to_string(frees);
  for (const auto& f : factors) {
    if (sgn(f) == 0) continue;
    if (!out.empty()) out += " + ";
    out += "Z/" + f.get_str();
  }
  return out;
}

InvariantFactors quotient_invariants(const IntMatrix& rel) {
  const auto snf = rings::smith_normal_form(rel);
  InvariantFactors inv;
  for (const auto& d : snf.diagonal())
    if (sgn(d) != 0 && abs(d) != 1) inv.factors.push_back(abs(d));
  for (std::size_t k = snf.rank; k < rel.cols(); ++k) inv.factors.push_back(0);
  return inv;
}

IntMatrix relation_lattice(const IntMatrix& gamma, const IntMatrix& rho) {
  if (gamma.cols() != rho.cols()) throw DimensionError("oracle: gamma and rho have different targets");
  const auto l = left_kernel(rings::stack(gamma, rho)).col_block(0, gamma.rows());
  return nonzero_rows(rings::hermite_normal_form(l));
}

InvariantFactors evaluate(const IntMatrix& gamma, const IntMatrix& rho) {
  return quotient_invariants(relation_lattice(gamma, rho));
}

bool induced_is_zero(const IntMatrix& alpha, const IntMatrix& gamma_b, const IntMatrix& rho_b) {
  const IntMatrix target = alpha * gamma_b;
  const auto ef = rings::hermite_normal_form(rho_b);
  for (std::size_t i = 0; i < target.rows(); ++i)
    if (!solve_in_hermite(ef, row_of(target, i), nullptr)) return false;
  return true;
}

InducedMapInvariants induced_map_invariants(const IntMatrix& alpha, const IntMatrix& gamma_x, const IntMatrix& rho_x,
                                            const IntMatrix& gamma_y, const IntMatrix& rho_y) {
  const IntMatrix sx = relation_lattice(gamma_x, rho_x);
  const IntMatrix sy = relation_lattice(gamma_y, rho_y);
  if (alpha.rows() != gamma_x.rows() || alpha.cols() != gamma_y.rows())
    throw DimensionError("oracle: alpha does not fit the objects");

  InducedMapInvariants out;
  // Preimage lattice L = {s : s*alpha in S_y}; the image is Z^a / L.
  const auto pre = left_kernel(rings::stack(alpha, sy)).col_block(0, alpha.rows());
  const auto lef = rings::hermite_normal_form(pre);
  const IntMatrix lbasis = nonzero_rows(lef);
  out.image = quotient_invariants(lbasis);
  out.cokernel = quotient_invariants(rings::stack(alpha, sy));
  // Kernel L / S_x, with S_x written in coordinates of the basis of L.
  IntMatrix coords(alpha.ring(), sx.rows(), lbasis.rows());
  for (std::size_t i = 0; i < sx.rows(); ++i) {
    std::vector<mpz_class> y;
    if (!solve_in_hermite(lef, row_of(sx, i), &y))
      throw PreconditionError("oracle: alpha does not induce a homomorphism");
    for (std::size_t k = 0; k < y.size(); ++k) coords(i, k) = y[k];
  }
  out.kernel = quotient_invariants(coords);
  return out;
}

InvariantFactors homology_invariants(const IntMatrix& d2, const IntMatrix& d1) {
  if (d2.cols() != d1.rows()) throw DimensionError("oracle: d2 and d1 do not compose");
  if (!(d2 * d1).is_zero()) throw PreconditionError("oracle: d2*d1 is not zero");
  const IntMatrix k = nonzero_rows(rings::hermite_normal_form(left_kernel(d1)));
  const auto kef = rings::hermite_normal_form(k);
  IntMatrix y(d2.ring(), d2.rows(), k.rows());
  for (std::size_t i = 0; i < d2.rows(); ++i) {
    std::vector<mpz_class> c;
    if (!solve_in_hermite(kef, row_of(d2, i), &c)) throw PreconditionError("oracle: im(d2) not inside ker(d1)");
    for (std::size_t j = 0; j < c.size(); ++j) y(i, j) = c[j];
  }
  return quotient_invariants(y);
}

std::size_t dimension(const FpMatrix& gamma, const FpMatrix& rho) {
  return rings::reduced_row_echelon(rings::stack(gamma, rho)).rank - rings::reduced_row_echelon(rho).rank;
}

}  // namespace subq::oracle
