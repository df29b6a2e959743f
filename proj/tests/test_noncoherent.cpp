#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "groebner_support.hpp"
#include "nc_corpus.hpp"
#include "support.hpp"

using namespace subq;
using namespace subq::noncoherent;
using testsupport::Rng;

namespace {

const NoncoherentRing R;

RElement E(const char* s) { return R.parse(s); }
RMatrix M(const char* s) { return rings::parse_matrix(R, s); }
RElement x(unsigned i) { return r_normalize(Poly::monomial(R.field(), groebner::Monomial::x(i))); }

bool canonical(const RElement& e) {
  for (const auto& t : e.poly().terms())
    if (t.mono.mixes_z_and_x()) return false;
  return e.p_x() + e.p_z() == e.poly();
}

RElement random_element(Rng& rng, unsigned n) { return testsupport::random_r_element(R, rng, n); }

}  // namespace

TEST_CASE("canonical form") {
  CHECK((E("x1 + z") * E("x2 + z")) == E("x1*x2 + z^2"));
  CHECK(E("x3*z").is_zero());
  const auto one = E("1 + 0*z");
  CHECK(one.p_x() == Poly::constant(R.field(), 1));
  CHECK(one.p_z().is_zero());
  const auto p = E("3 + x1^2 + 2*z^3 + x4*z^5");
  CHECK(p.p_x() == Poly::parse(R.field(), "3 + x1^2"));
  CHECK(p.p_z() == Poly::parse(R.field(), "2*z^3"));
  CHECK(E("x17").max_x_index() == 17);

  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    auto a = random_element(rng, 3), b = random_element(rng, 3);
    CHECK(canonical(a * b));
    CHECK(canonical(a + b));
    CHECK((x(1 + unsigned(rng() % 3)) * E("z")).is_zero());
  }
}

TEST_CASE("min_cutoff") {
  const auto a = M("[[z, x3]]"), b = M("[[z, z^2]]"), c = M("[[x1*x2]]"), d = M("[[x5 + 1]]");
  CHECK(min_cutoff({a}) == 3);
  CHECK(min_cutoff({b}) == 1);
  CHECK(min_cutoff({c}) == 2);
  CHECK(min_cutoff({b, d}) == 5);
}

TEST_CASE("kernel generators") {
  auto kz = kernel_generators(M("[[z]]"));
  CHECK(kz.n == 1);
  CHECK(kz.sigma == M("[[x1]]"));
  CHECK(kz.tau == M("[[1]]"));

  auto k1 = kernel_generators(M("[[1]]"));
  CHECK(k1.d() == 0);
  CHECK(k1.e() == 0);

  auto kx = kernel_generators(M("[[x1]]"));
  CHECK(kx.n == 1);
  CHECK(kx.sigma == M("[[z]]"));
  CHECK(kx.e() == 0);

  // sigma*gamma = 0 and x_k*tau*gamma = 0 for k = n+1, n+2.
  Rng rng(2);
  for (int t = 0; t < 25; ++t) {
    const unsigned n = 1 + unsigned(rng() % 2);
    const std::size_t rows = 1 + rng() % 2, cols = 1 + rng() % 2;
    RMatrix g(R, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 3) g(i, j) = random_element(rng, n);
    auto k = kernel_generators(g);
    CHECK((k.sigma * g).is_zero());
    for (unsigned extra = 1; extra <= 2; ++extra) CHECK((rings::scale(x(k.n + extra), k.tau) * g).is_zero());
  }
}

TEST_CASE("decide_lift_R") {
  auto l = decide_lift_R(M("[[z]]"), M("[[z^3]]"));
  REQUIRE(l);
  CHECK(*l == M("[[z^2]]"));
  CHECK_FALSE(decide_lift_R(M("[[z]]"), M("[[x1]]")));
  auto b = M("[[x2 + z, 3], [x1*x2, z^2]]");
  auto id = decide_lift_R(RMatrix::identity(R, 2), b);
  REQUIRE(id);
  CHECK(*id == b);
  // x_{n+1} is a syzygy of z, yet not a combination of x_1..x_n.
  for (unsigned n = 1; n <= 4; ++n) {
    RMatrix xs(R, n, 1);
    for (unsigned i = 1; i <= n; ++i) xs(i - 1, 0) = x(i);
    RMatrix target(R, 1, 1);
    target(0, 0) = x(n + 1);
    CHECK_FALSE(decide_lift_R(xs, target));
  }
  CHECK_THROWS_AS(decide_lift_R(M("[[z]]"), M("[[1, 2]]")), DimensionError);
}

TEST_CASE("syzygy inclusion over R: corpus") {
  Rng rng(9);
  for (const auto& c : testsupport::nc_corpus()) {
    CAPTURE(c.gamma);
    CAPTURE(c.rho);
    CAPTURE(c.gamma2);
    CAPTURE(c.rho2);
    const auto first = testsupport::nc_cospan(R, c.gamma, c.rho);
    const auto second = testsupport::nc_cospan(R, c.gamma2, c.rho2);
    auto d = syzygy_inclusion_R(first, second);
    CHECK(d.included == c.included);
    const auto [f, s] = addcat::simplify_cospan_pair(first, second);
    if (d.included) {
      for (std::size_t i = 0; i < d.generators.rows(); ++i)
        CHECK(d.generators.row(i) * s.gamma() == d.generator_witnesses[i] * s.rho());
      for (const auto& sigma : testsupport::random_r_syzygies(first, rng, 20)) {
        REQUIRE(decide_lift_R(first.rho(), sigma * first.gamma()));
        auto omega = d.witness(sigma);
        REQUIRE(omega);
        CHECK(sigma * second.gamma() == *omega * second.rho());
      }
    } else {
      REQUIRE(d.counterexample);
      CHECK((*d.counterexample * f.gamma()).is_zero());
      CHECK_FALSE(decide_lift_R(s.rho(), *d.counterexample * s.gamma()));
      if (std::string(c.counterexample).size()) CHECK(*d.counterexample == M(c.counterexample));
    }
  }
}

TEST_CASE("syzygy inclusion over R: symmetry in the x_i beyond the cutoff") {
  for (const auto& c : testsupport::nc_corpus()) {
    const auto first = testsupport::nc_cospan(R, c.gamma, c.rho);
    const auto second = testsupport::nc_cospan(R, c.gamma2, c.rho2);
    const auto [f, s] = addcat::simplify_cospan_pair(first, second);
    const RMatrix fg = f.gamma(), sg = s.gamma(), sr = s.rho();
    const unsigned n = min_cutoff({fg, sg, sr});
    const auto k = kernel_generators(f.gamma(), n);
    for (std::size_t j = 0; j < k.e(); ++j) {
      auto t1 = rings::scale(x(n + 1), k.tau.row(j));
      auto t2 = rings::scale(x(n + 2), k.tau.row(j));
      if (decide_lift_R(s.rho(), t1 * s.gamma())) CHECK(decide_lift_R(s.rho(), t2 * s.gamma()));
    }
  }
}

TEST_CASE("syzygy inclusion over R: reflexive and transitive on the corpus") {
  std::vector<RCospan> objs;
  for (const auto& c : testsupport::nc_corpus()) {
    for (auto cs : {testsupport::nc_cospan(R, c.gamma, c.rho), testsupport::nc_cospan(R, c.gamma2, c.rho2)})
      if (cs.source_rank() == 1 && std::find(objs.begin(), objs.end(), cs) == objs.end()) objs.push_back(cs);
  }
  const std::size_t n = objs.size();
  std::vector<std::vector<char>> inc(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inc[i][j] = syzygy_inclusion_R(objs[i], objs[j]).included;
  for (std::size_t i = 0; i < n; ++i) CHECK(inc[i][i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (inc[i][j] && inc[j][k]) CHECK(inc[i][k]);
}

TEST_CASE("malformed inclusion queries") {
  CHECK_THROWS_AS(syzygy_inclusion_R(RCospan::without_relations(M("[[z]]")),
                                     RCospan::without_relations(M("[[z],[1]]"))),
                  DimensionError);
  CHECK_THROWS_AS(RCospan(M("[[z]]"), M("[[1, 1]]")), DimensionError);
}
