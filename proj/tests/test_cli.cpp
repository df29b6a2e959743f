#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <regex>
#include <sstream>

#include "subq/cli/session.hpp"
#include "subq/errors.hpp"
#include "subq/noncoherent/noncoherent.hpp"
#include "subq/rings/integer_ring.hpp"
#include "subq/rings/literal.hpp"
#include "subq/rings/prime_field.hpp"

using namespace subq;
using namespace subq::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string session(const std::string& name) { return slurp(std::string(SUBQ_TEST_DIR) + "/sessions/" + name + ".qs"); }
std::string golden(const std::string& name) { return slurp(std::string(SUBQ_TEST_DIR) + "/golden/" + name + ".out"); }

struct Golden {
  const char* name;
  int exit_code;
};
const Golden kGolden[] = {{"integers", 0}, {"prime_field", 0}, {"noncoherent", 1}, {"errors", 1}};

// Every matrix literal printed in a report.
std::vector<std::string> printed_matrices(const std::string& text) {
  static const std::regex lit(R"(\[\[.*?\]\]|\d+x\d+:\[\])");
  std::vector<std::string> out;
  for (std::sregex_iterator it(text.begin(), text.end(), lit), end; it != end; ++it) out.push_back(it->str());
  return out;
}

template <class Ring>
void check_round_trip(const Ring& ring, const std::string& text) {
  for (const auto& m : printed_matrices(text)) {
    CAPTURE(m);
    CHECK(rings::format(rings::parse_matrix(ring, m)) == m);
  }
}

}  // namespace

TEST_CASE("golden sessions") {
  for (const auto& g : kGolden) {
    CAPTURE(g.name);
    const auto report = run_text(session(g.name));
    CHECK(report.exit_code == g.exit_code);
    CHECK(report.text == golden(g.name));
  }
  const auto verified = run_text(session("integers"), RunOptions{true});
  CHECK(verified.exit_code == 0);
  CHECK(verified.text == golden("integers.verified"));
}

TEST_CASE("reports are deterministic") {
  for (const auto& g : kGolden) {
    const auto text = session(g.name);
    CHECK(run_text(text).text == run_text(text).text);
  }
}

TEST_CASE("printed matrices re-parse") {
  check_round_trip(rings::IntegerRing(), golden("integers"));
  check_round_trip(rings::IntegerRing(), golden("errors"));
  check_round_trip(rings::PrimeField(7), golden("prime_field"));
  check_round_trip(noncoherent::NoncoherentRing(), golden("noncoherent"));
}

TEST_CASE("parsing") {
  auto s = parse_session("ring Z\nmatrix g 1 1 [[2]]\ncospan X = g | empty\n");
  CHECK(s.ring_name() == "Z");
  CHECK(s.command_count() == 0);
  CHECK(parse_session("cospan X = emb 2\ninvariants X").ring_name() == "Z");
  CHECK(parse_session("ring NC").ring_name() == "NC(101)");
  CHECK(parse_session("ring GF(5)  # comment").ring_name() == "GF(5)");

  // x3*z vanishes in the quotient ring, so gamma is zero and id is the zero map.
  auto nc = run_text("ring NC(101)\ncospan X = [[x3*z]]\nmorphism f : X -> X = id\niszero f\n");
  CHECK(nc.exit_code == 0);
  CHECK(nc.text == "> iszero f\nyes, zeta=1x0:[]\n");

  auto z2 = run_text("ring Z\nmatrix g 1 1 [[1]]\ncospan X = g | [[2]]\ninvariants X");
  CHECK(z2.text == "> invariants X\nZ/2\n");
}

TEST_CASE("parse errors carry line numbers") {
  struct Bad {
    const char* text;
    const char* fragment;
  };
  const Bad cases[] = {
      {"ring Z\nmatrix g 1 1 [[2]]\ncospan X = h | empty", "line 3"},
      {"ring Z\nmatrix g 1 1 [[2]]\ncospan X = h | empty", "'h'"},
      {"ring Z\ncospan A = [[1]] | [[2]]\ncospan B = [[1]] | [[4]]\nmorphism f : A -> B = [[1]]", "line 4"},
      {"ring Z\ncospan A = [[1]] | [[2]]\ncospan B = [[1]] | [[4]]\nmorphism f : A -> B = [[1]]", "[[2]]"},
      {"ring Z\ncospan A = emb 1\ncospan A = emb 2", "line 3"},
      {"ring Z\nfrobnicate", "line 2"},
      {"ring Q", "line 1"},
      {"ring Z\nmatrix m 2 2 [[1, 2]]", "line 2"},
      {"ring Z\ncospan X = [[1, 2]] | [[1]]", "line 2"},
      {"ring Z\ncospan X = emb 1\niszero X", "line 3"},
      {"ring GF(6)", "line 1"},
      {"cospan X = emb 1\nring Z", "line 2"},
  };
  for (const auto& b : cases) {
    CAPTURE(b.text);
    const auto r = run_text(b.text);
    CHECK(r.exit_code == 2);
    CHECK(r.text.rfind("error: ", 0) == 0);
    CHECK(r.text.find(b.fragment) != std::string::npos);
    CHECK_THROWS_AS(parse_session(b.text), ParseError);
  }
}

TEST_CASE("command failures do not stop the session") {
  auto r = run_text("ring NC(7)\ncospan X = [[z]]\nmorphism f : X -> X = id\nkernel f\niszero f");
  CHECK(r.exit_code == 1);
  CHECK(r.text == "> kernel f\nerror: kernel unavailable: backend lacks weak kernels\n> iszero f\nno\n");
}
