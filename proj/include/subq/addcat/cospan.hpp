#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subq/errors.hpp"
#include "subq/rings/matrix.hpp"

namespace subq::addcat {

using rings::Matrix;

/// The cospan (A --gamma--> Omega <--rho-- C) in a rows category. The first
/// object A has rank gamma.rows(); the relation object C has rank rho.rows().
template <class Ring>
class Cospan {
 public:
  Cospan() = default;
  Cospan(Matrix<Ring> gamma, Matrix<Ring> rho) : gamma_(std::move(gamma)), rho_(std::move(rho)) {
    rings::detail::require_same_ring(gamma_, rho_, "cospan");
    if (gamma_.cols() != rho_.cols())
      throw DimensionError("cospan legs have different targets: " + std::to_string(gamma_.cols()) + " vs " +
                           std::to_string(rho_.cols()));
  }

  /// (A --gamma--> Omega <-- 0).
  static Cospan without_relations(Matrix<Ring> gamma) {
    Matrix<Ring> rho(gamma.ring(), 0, gamma.cols());
    return Cospan(std::move(gamma), std::move(rho));
  }

  const Matrix<Ring>& gamma() const { return gamma_; }
  const Matrix<Ring>& rho() const { return rho_; }
  const Ring& ring() const { return gamma_.ring(); }
  std::size_t source_rank() const { return gamma_.rows(); }
  std::size_t target_rank() const { return gamma_.cols(); }
  std::size_t relation_rank() const { return rho_.rows(); }

  friend bool operator==(const Cospan& a, const Cospan& b) { return a.gamma_ == b.gamma_ && a.rho_ == b.rho_; }

 private:
  Matrix<Ring> gamma_;
  Matrix<Ring> rho_;
};

template <class Ring>
std::string format(const Cospan<Ring>& c) {
  return "(" + std::to_string(c.source_rank()) + " -> " + format(c.gamma()) + " <- " + format(c.rho()) + ")";
}

/// Answer to "Syz(first) inside Syz(second)?". On yes, `witness` maps any
/// syzygy sigma of the first cospan to omega with sigma*gamma' = omega*rho'
/// (nothing when sigma is not a syzygy of the second cospan). On no,
/// `counterexample` is a syzygy generator of the first cospan that fails.
template <class Ring>
struct InclusionDecision {
  bool included = false;
  std::optional<Matrix<Ring>> counterexample;
  Matrix<Ring> generators;                    // checked generators, one per row
  std::vector<Matrix<Ring>> generator_witnesses;  // omega per generator (yes only)
  std::function<std::optional<Matrix<Ring>>(const Matrix<Ring>&)> witness;

  explicit operator bool() const { return included; }
};

/// Replaces (first, second) by the pair
///   (A+C --[gamma; rho]--> B <-- 0)  vs  (A+C --[gamma'; 0]--> B' <--rho'-- C'),
/// whose inclusion answer coincides with the original one.
template <class Ring>
std::pair<Cospan<Ring>, Cospan<Ring>> simplify_cospan_pair(const Cospan<Ring>& first, const Cospan<Ring>& second) {
  if (first.source_rank() != second.source_rank())
    throw DimensionError("syzygy inclusion needs a common first object");
  const auto& ring = first.ring();
  Cospan<Ring> f = Cospan<Ring>::without_relations(rings::stack(first.gamma(), first.rho()));
  Matrix<Ring> lower(ring, first.relation_rank(), second.target_rank());
  Cospan<Ring> s(rings::stack(second.gamma(), lower), second.rho());
  return {std::move(f), std::move(s)};
}

}  // namespace subq::addcat
