#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "subq/addcat/syzygy.hpp"
#include "subq/rings/literal.hpp"
#include "support.hpp"

using namespace subq;
using namespace subq::addcat;
using testsupport::Rng;
using rings::IntMatrix;
using rings::FpMatrix;

namespace {

const rings::IntegerRing Z;
const rings::PrimeField F(101);

IntMatrix M(const char* s) { return rings::parse_matrix(Z, s); }
Cospan<rings::IntegerRing> C(const char* g, const char* r) { return Cospan<rings::IntegerRing>(M(g), M(r)); }

template <class Ring>
Cospan<Ring> random_cospan(const Ring& ring, Rng& rng, std::size_t a) {
  const std::size_t b = std::size_t(testsupport::uniform(rng, 0, 3));
  const std::size_t c = std::size_t(testsupport::uniform(rng, 0, 3));
  return Cospan<Ring>(testsupport::random_sparse_matrix(ring, rng, a, b, 4),
                      testsupport::random_sparse_matrix(ring, rng, c, b, 4));
}

// Random pairs (tau, sigma) with tau*gamma = sigma*alpha: combinations of the
// row syzygies of [alpha; gamma], drawn independently of the pullback.
template <class Ring>
std::vector<Matrix<Ring>> pullback_tests(const Matrix<Ring>& alpha, const Matrix<Ring>& gamma, Rng& rng, int count) {
  const auto l = rings::row_syzygies(rings::stack(alpha, gamma));
  std::vector<Matrix<Ring>> out;
  for (int k = 0; k < count; ++k) {
    auto coeff = testsupport::random_matrix(alpha.ring(), rng, std::size_t(testsupport::uniform(rng, 1, 3)), l.rows(), 3);
    out.push_back(-(coeff * l).col_block(alpha.rows(), alpha.rows() + gamma.rows()));
  }
  return out;
}

template <class Ring>
void check_pullback_properties(const Ring& ring, std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 60; ++t) {
    const std::size_t a = std::size_t(testsupport::uniform(rng, 0, 3)), b = std::size_t(testsupport::uniform(rng, 0, 3)),
                      c = std::size_t(testsupport::uniform(rng, 0, 3));
    auto alpha = testsupport::random_sparse_matrix(ring, rng, a, b, 4);
    auto gamma = testsupport::random_sparse_matrix(ring, rng, c, b, 4);
    auto p = biased_weak_pullback(alpha, gamma);
    CHECK(p.omega * alpha == p.pi * gamma);
    for (const auto& tau : pullback_tests(alpha, gamma, rng, 5)) {
      REQUIRE(decide_lift(alpha, tau * gamma));
      CHECK(p.lift(tau) * p.pi == tau);
    }

    auto k = weak_kernel(gamma);
    CHECK((k.kappa * gamma).is_zero());
    const auto ker = rings::row_syzygies(gamma);
    for (int s = 0; s < 50; ++s) {
      auto tau = testsupport::random_matrix(ring, rng, 1, ker.rows(), 3) * ker;
      CHECK(k.lift(tau) * k.kappa == tau);
    }

    auto w = weak_pullback(alpha, gamma);
    CHECK(w.to_a * alpha == w.to_c * gamma);
  }
}

}  // namespace

TEST_CASE("syzygy membership") {
  const auto cs = C("[[1]]", "[[2]]");
  auto w = syzygy_membership(M("[[2]]"), cs);
  REQUIRE(w);
  CHECK(*w == M("[[1]]"));
  CHECK_FALSE(syzygy_membership(M("[[1]]"), cs));
  auto z = syzygy_membership(M("[[0]]"), C("[[3, 1]]", "[[5, 7], [0, 2]]"));
  REQUIRE(z);
  CHECK(z->is_zero());
  CHECK_THROWS_AS(syzygy_membership(M("[[1, 1]]"), cs), DimensionError);

  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    auto c = random_cospan(Z, rng, 2);
    auto sigma = testsupport::random_matrix(Z, rng, 1, 2, 4);
    if (auto omega = syzygy_membership(sigma, c)) CHECK(sigma * c.gamma() == *omega * c.rho());
  }
}

TEST_CASE("syzygy inclusion over Z") {
  CHECK(syzygy_inclusion(C("[[2]]", "0x1:[]"), C("[[0]]", "0x1:[]")).included);

  auto no = syzygy_inclusion(C("[[1]]", "[[2]]"), C("[[1]]", "[[4]]"));
  CHECK_FALSE(no.included);
  REQUIRE(no.counterexample);
  CHECK(*no.counterexample == M("[[2]]"));

  auto yes = syzygy_inclusion(C("[[1]]", "[[4]]"), C("[[1]]", "[[2]]"));
  REQUIRE(yes.included);
  REQUIRE(yes.generators.rows() == 1);
  CHECK(yes.generators == M("[[4]]"));
  auto omega = yes.witness(M("[[-8]]"));
  REQUIRE(omega);
  CHECK(*omega == M("[[-4]]"));

  CHECK_THROWS_AS(syzygy_inclusion(C("[[1]]", "[[4]]"), C("[[1],[1]]", "[[2]]")), DimensionError);
}

TEST_CASE("biased weak pullback examples") {
  auto p = biased_weak_pullback(M("[[2]]"), M("[[3]]"));
  CHECK(p.pi == M("[[2]]"));
  CHECK(p.omega == M("[[3]]"));

  // A --0--> 0 <--0-- C: the projection is the identity of C.
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t c = 0; c <= 3; ++c) {
      auto q = biased_weak_pullback(IntMatrix(Z, a, 0), IntMatrix(Z, c, 0));
      CHECK(q.pi == IntMatrix::identity(Z, c));
    }

  auto id = biased_weak_pullback(IntMatrix::identity(Z, 2), M("[[1, 4], [2, 3], [0, 5]]"));
  CHECK(id.pi == IntMatrix::identity(Z, 3));

  CHECK_THROWS_AS(biased_weak_pullback(M("[[1, 2]]"), M("[[1]]")), DimensionError);
}

TEST_CASE("weak kernel examples") {
  CHECK(weak_kernel(M("[[2]]")).rank() == 0);
  CHECK(weak_kernel(M("[[0]]")).kappa == M("[[1]]"));
  CHECK(weak_kernel(M("[[2, 4]]")).rank() == 0);
  auto k = weak_kernel(M("[[2], [3]]"));
  REQUIRE(k.rank() == 1);
  CHECK((k.kappa * M("[[2], [3]]")).is_zero());
  CHECK(k.lift(M("[[6, -4]]")) * k.kappa == M("[[6, -4]]"));
  CHECK_THROWS_AS(k.lift(M("[[1, 0]]")), PreconditionError);
}

TEST_CASE("direct sums") {
  auto zero = Cospan<rings::IntegerRing>::without_relations(IntMatrix(Z, 0, 0));
  CHECK(direct_sum<rings::IntegerRing>({zero, zero}) == zero);
  auto a = C("[[1, 2]]", "[[3, 0]]"), b = C("[[5]]", "[[7], [8]]");
  auto s = direct_sum<rings::IntegerRing>({a, b});
  CHECK(s.gamma() == M("[[1, 2, 0], [0, 0, 5]]"));
  CHECK(s.rho() == M("[[3, 0, 0], [0, 0, 7], [0, 0, 8]]"));
  CHECK(direct_sum<rings::IntegerRing>({a}) == a);
  CHECK_THROWS_AS(direct_sum<rings::IntegerRing>({}), PreconditionError);
}

TEST_CASE("simplified pairs") {
  auto [f, s] = simplify_cospan_pair(C("[[1]]", "[[2]]"), C("[[1]]", "[[4]]"));
  CHECK(f.gamma() == M("[[1], [2]]"));
  CHECK(f.relation_rank() == 0);
  CHECK(s.gamma() == M("[[1], [0]]"));
  CHECK(s.rho() == M("[[4]]"));
  CHECK_FALSE(syzygy_inclusion(f, s).included);

  auto plain = Cospan<rings::IntegerRing>::without_relations(M("[[1, 2], [3, 4]]"));
  auto [f0, s0] = simplify_cospan_pair(plain, plain);
  CHECK(f0 == plain);

  Rng rng(5);
  int agree = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t a = std::size_t(testsupport::uniform(rng, 1, 3));
    auto x = random_cospan(Z, rng, a), y = random_cospan(Z, rng, a);
    auto [fx, sy] = simplify_cospan_pair(x, y);
    agree += syzygy_inclusion(x, y).included == syzygy_inclusion(fx, sy).included;
  }
  CHECK(agree == 100);
}

TEST_CASE("inclusion is reflexive and monotone") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const std::size_t a = std::size_t(testsupport::uniform(rng, 1, 3));
    auto x = random_cospan(Z, rng, a), y = random_cospan(Z, rng, a);
    CHECK(syzygy_inclusion(x, x).included);
    auto bigger = Cospan<rings::IntegerRing>(
        y.gamma(), rings::stack(y.rho(), testsupport::random_matrix(Z, rng, 1, y.target_rank(), 4)));
    if (syzygy_inclusion(x, y).included) CHECK(syzygy_inclusion(x, bigger).included);

    auto fx = random_cospan(F, rng, a);
    CHECK(syzygy_inclusion(fx, fx).included);
  }
}

TEST_CASE("pullback and kernel properties over Z") { check_pullback_properties(Z, 11); }
TEST_CASE("pullback and kernel properties over GF(101)") { check_pullback_properties(F, 12); }

TEST_CASE("no weak kernels over the non-coherent ring") {
  const noncoherent::NoncoherentRing R;
  auto g = rings::parse_matrix(R, "[[z]]");
  CHECK_THROWS_AS(biased_weak_pullback(g, g), CapabilityError);
  CHECK_THROWS_AS(weak_kernel(g), CapabilityError);
}
