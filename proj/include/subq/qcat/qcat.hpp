#pragma once

#include <optional>
#include <string>
#include <utility>

#include "subq/addcat/syzygy.hpp"

namespace subq::qcat {

using addcat::Cospan;
using rings::Matrix;

/// Objects of Q(P) are cospans; object equality is syntactic.
template <class Ring>
using QObject = Cospan<Ring>;

/// A morphism of Q(P): alpha between the first objects, known to map
/// syzygies of src to syzygies of dst. Only make_qmorphism and the
/// constructions below create values, so every QMorphism is well defined.
template <class Ring>
class QMorphism {
 public:
  const QObject<Ring>& src() const { return src_; }
  const QObject<Ring>& dst() const { return dst_; }
  const Matrix<Ring>& alpha() const { return alpha_; }
  const Ring& ring() const { return alpha_.ring(); }

  /// For morphisms that are well defined by construction (composites, sums,
  /// identities); shapes are still checked.
  static QMorphism trusted(QObject<Ring> src, QObject<Ring> dst, Matrix<Ring> alpha) {
    if (alpha.rows() != src.source_rank() || alpha.cols() != dst.source_rank())
      throw DimensionError("morphism matrix is " + std::to_string(alpha.rows()) + "x" + std::to_string(alpha.cols()) +
                           ", endpoints need " + std::to_string(src.source_rank()) + "x" +
                           std::to_string(dst.source_rank()));
    return QMorphism(std::move(src), std::move(dst), std::move(alpha));
  }

 private:
  QMorphism(QObject<Ring> src, QObject<Ring> dst, Matrix<Ring> alpha)
      : src_(std::move(src)), dst_(std::move(dst)), alpha_(std::move(alpha)) {}

  QObject<Ring> src_;
  QObject<Ring> dst_;
  Matrix<Ring> alpha_;
};

/// The cospan (A --alpha*gamma_B--> Omega_B <--rho_B-- R_B) of a candidate morphism.
template <class Ring>
Cospan<Ring> pushed_cospan(const Matrix<Ring>& alpha, const QObject<Ring>& dst) {
  return Cospan<Ring>(alpha * dst.gamma(), dst.rho());
}

/// Validates Syz(src) inside Syz(pushed cospan); throws IllDefinedMorphism
/// carrying the failing syzygy generator.
template <class Ring>
QMorphism<Ring> make_qmorphism(const QObject<Ring>& src, const QObject<Ring>& dst, const Matrix<Ring>& alpha) {
  auto m = QMorphism<Ring>::trusted(src, dst, alpha);
  auto d = addcat::syzygy_inclusion(src, pushed_cospan(alpha, dst));
  if (!d) {
    const std::string ce = format(*d.counterexample);
    throw IllDefinedMorphism("morphism is not well defined: syzygy " + ce + " is not mapped to a syzygy", ce);
  }
  return m;
}

template <class Ring>
void require_same_endpoints(const QMorphism<Ring>& f, const QMorphism<Ring>& g, const char* op) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) throw DimensionError(std::string(op) + ": endpoint mismatch");
}

/// f then g.
template <class Ring>
QMorphism<Ring> compose(const QMorphism<Ring>& f, const QMorphism<Ring>& g) {
  if (!(f.dst() == g.src())) throw DimensionError("compose: target of the first is not the source of the second");
  return QMorphism<Ring>::trusted(f.src(), g.dst(), f.alpha() * g.alpha());
}

template <class Ring>
QMorphism<Ring> add(const QMorphism<Ring>& f, const QMorphism<Ring>& g) {
  require_same_endpoints(f, g, "add");
  return QMorphism<Ring>::trusted(f.src(), f.dst(), f.alpha() + g.alpha());
}

template <class Ring>
QMorphism<Ring> sub(const QMorphism<Ring>& f, const QMorphism<Ring>& g) {
  require_same_endpoints(f, g, "sub");
  return QMorphism<Ring>::trusted(f.src(), f.dst(), f.alpha() - g.alpha());
}

template <class Ring>
QMorphism<Ring> neg(const QMorphism<Ring>& f) {
  return QMorphism<Ring>::trusted(f.src(), f.dst(), -f.alpha());
}

template <class Ring>
QMorphism<Ring> identity(const QObject<Ring>& x) {
  return QMorphism<Ring>::trusted(x, x, Matrix<Ring>::identity(x.ring(), x.source_rank()));
}

template <class Ring>
QMorphism<Ring> zero_morphism(const QObject<Ring>& x, const QObject<Ring>& y) {
  return QMorphism<Ring>::trusted(x, y, Matrix<Ring>(x.ring(), x.source_rank(), y.source_rank()));
}

/// zeta with zeta*rho_B = alpha*gamma_B when phi is zero in Q(P).
template <class Ring>
std::optional<Matrix<Ring>> is_zero(const QMorphism<Ring>& phi) {
  return decide_lift(phi.dst().rho(), phi.alpha() * phi.dst().gamma());
}

template <class Ring>
bool eq(const QMorphism<Ring>& f, const QMorphism<Ring>& g) {
  return is_zero(sub(f, g)).has_value();
}

/// emb(A) = (A --id--> A <-- 0).
template <class Ring>
QObject<Ring> emb(const Ring& ring, std::size_t rank) {
  return QObject<Ring>::without_relations(Matrix<Ring>::identity(ring, rank));
}

template <class Ring>
QMorphism<Ring> emb(const Matrix<Ring>& alpha) {
  return QMorphism<Ring>::trusted(emb(alpha.ring(), alpha.rows()), emb(alpha.ring(), alpha.cols()), alpha);
}

/// emb(A) -> X with underlying identity; always an epimorphism.
template <class Ring>
QMorphism<Ring> cover(const QObject<Ring>& x) {
  return QMorphism<Ring>::trusted(emb(x.ring(), x.source_rank()), x,
                                  Matrix<Ring>::identity(x.ring(), x.source_rank()));
}

template <class Ring>
struct Cokernel {
  QObject<Ring> object;
  QMorphism<Ring> proj;
};

/// C = (B --gamma_B--> Omega_B <--[rho_B; alpha*gamma_B]-- R_B + A), proj = id_B.
template <class Ring>
Cokernel<Ring> cokernel(const QMorphism<Ring>& phi) {
  const auto& y = phi.dst();
  QObject<Ring> c(y.gamma(), rings::stack(y.rho(), phi.alpha() * y.gamma()));
  auto proj = QMorphism<Ring>::trusted(y, c, Matrix<Ring>::identity(y.ring(), y.source_rank()));
  return {std::move(c), std::move(proj)};
}

/// The morphism coker(phi) -> T induced by tau: dst -> T with phi*tau = 0.
template <class Ring>
QMorphism<Ring> cokernel_colift(const QMorphism<Ring>& phi, const QMorphism<Ring>& tau) {
  if (!is_zero(compose(phi, tau))) throw PreconditionError("cokernel colift: phi*tau is not zero");
  return make_qmorphism(cokernel(phi).object, tau.dst(), tau.alpha());
}

template <class Ring>
bool is_epi(const QMorphism<Ring>& phi) {
  return is_zero(cokernel(phi).proj).has_value();
}

template <class Ring>
bool is_mono(const QMorphism<Ring>& phi) {
  return addcat::syzygy_inclusion(pushed_cospan(phi.alpha(), phi.dst()), phi.src()).included;
}

/// lambda: T -> src with lambda*phi = tau, for phi mono and tau*coker(phi) = 0.
template <class Ring>
QMorphism<Ring> lift_along_mono(const QMorphism<Ring>& phi, const QMorphism<Ring>& tau) {
  if (!(tau.dst() == phi.dst())) throw DimensionError("lift_along_mono: tau and phi have different targets");
  if (!is_mono(phi)) throw PreconditionError("lift_along_mono: phi is not a monomorphism");
  const auto ck = cokernel(phi);
  // zeta*[rho_B; alpha*gamma_B] = tau*gamma_B, split as (zeta_1 | zeta_2).
  auto zeta = is_zero(compose(tau, ck.proj));
  if (!zeta) throw PreconditionError("lift_along_mono: tau does not factor through phi");
  const std::size_t rb = phi.dst().relation_rank();
  return make_qmorphism(tau.src(), phi.src(), zeta->col_block(rb, zeta->cols()));
}

template <class Ring>
struct Factorization {
  QObject<Ring> image;
  QMorphism<Ring> epi;   // src -> image, underlying id_A
  QMorphism<Ring> mono;  // image -> dst, underlying alpha
};

template <class Ring>
Factorization<Ring> epi_mono_factorization(const QMorphism<Ring>& phi) {
  QObject<Ring> image = pushed_cospan(phi.alpha(), phi.dst());
  auto e = QMorphism<Ring>::trusted(phi.src(), image, Matrix<Ring>::identity(phi.ring(), phi.src().source_rank()));
  auto m = QMorphism<Ring>::trusted(image, phi.dst(), phi.alpha());
  return {std::move(image), std::move(e), std::move(m)};
}

/// Comparison image -> I' for a second factorization phi = e2*m2 through I'.
template <class Ring>
QMorphism<Ring> factorization_comparison(const Factorization<Ring>& f, const QMorphism<Ring>& e2) {
  if (!(e2.src() == f.epi.src())) throw DimensionError("factorization_comparison: epi has the wrong source");
  return make_qmorphism(f.image, e2.dst(), e2.alpha());
}

/// The morphism dst -> T with phi*result = tau, for phi epi and tau a test morphism.
template <class Ring>
QMorphism<Ring> colift_along_epi(const QMorphism<Ring>& phi, const QMorphism<Ring>& tau) {
  if (!(tau.src() == phi.src())) throw DimensionError("colift_along_epi: tau and phi have different sources");
  const auto ck = cokernel(phi);
  auto zeta = is_zero(ck.proj);
  if (!zeta) throw PreconditionError("colift_along_epi: phi is not an epimorphism");
  auto test = addcat::syzygy_inclusion(pushed_cospan(phi.alpha(), phi.dst()), pushed_cospan(tau.alpha(), tau.dst()));
  if (!test)
    throw PreconditionError("colift_along_epi: tau is not a test morphism, failing syzygy " +
                            format(*test.counterexample));
  // gamma_B = zeta_1*rho_B + zeta_2*alpha*gamma_B.
  const std::size_t rb = phi.dst().relation_rank();
  return make_qmorphism(phi.dst(), tau.dst(), zeta->col_block(rb, zeta->cols()) * tau.alpha());
}

template <class Ring>
struct Kernel {
  QObject<Ring> object;
  QMorphism<Ring> kappa;
  addcat::BiasedWeakPullback<Ring> pullback;

  /// The morphism T -> K with result*kappa = tau, for tau*phi = 0.
  QMorphism<Ring> induce(const QMorphism<Ring>& tau) const {
    if (!(tau.dst() == kappa.dst())) throw DimensionError("kernel induce: tau has the wrong target");
    return make_qmorphism(tau.src(), object, pullback.lift(tau.alpha()));
  }
};

/// K = (P --pi*gamma_A--> Omega_A <--rho_A-- R_A) with P the biased weak
/// pullback of (rho_B, alpha*gamma_B); kappa has underlying pi.
template <class Ring>
Kernel<Ring> kernel(const QMorphism<Ring>& phi) {
  if constexpr (!Ring::kFiniteSyzygies) {
    throw CapabilityError("kernel unavailable: backend lacks weak kernels");
  } else {
    const auto& x = phi.src();
    auto p = addcat::biased_weak_pullback(phi.dst().rho(), phi.alpha() * phi.dst().gamma());
    QObject<Ring> k(p.pi * x.gamma(), x.rho());
    auto kappa = QMorphism<Ring>::trusted(k, x, p.pi);
    return {std::move(k), std::move(kappa), std::move(p)};
  }
}

/// Two-sided inverse of a morphism that is both mono and epi.
template <class Ring>
QMorphism<Ring> invert(const QMorphism<Ring>& phi) {
  if (!is_mono(phi) || !is_epi(phi)) throw PreconditionError("invert: morphism is not both mono and epi");
  return lift_along_mono(phi, identity(phi.dst()));
}

/// ker(d1) / im(d2) for d2: X -> Y, d1: Y -> Z with d2*d1 = 0.
template <class Ring>
QObject<Ring> homology_at(const QMorphism<Ring>& d2, const QMorphism<Ring>& d1) {
  if (!is_zero(compose(d2, d1))) throw PreconditionError("homology: d2*d1 is not zero");
  const auto k = kernel(d1);
  return cokernel(lift_along_mono(k.kappa, d2)).object;
}

}  // namespace subq::qcat
