#include <cctype>
#include <set>
#include <sstream>

#include "session_state.hpp"
#include "subq/rings/literal.hpp"

namespace subq::cli {

namespace detail {
namespace {

using rings::detail::trim;

struct CommandSpec {
  const char* verb;
  std::vector<char> kinds;  // 'm' morphism, 'o' object
};

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs = {
      {"eq", {'m', 'm'}},       {"iszero", {'m'}},          {"ismono", {'m'}},      {"isepi", {'m'}},
      {"cokernel", {'m'}},      {"kernel", {'m'}},          {"image", {'m'}},       {"lift-mono", {'m', 'm'}},
      {"colift-epi", {'m', 'm'}}, {"homology", {'m', 'm'}}, {"syzincl", {'o', 'o'}}, {"invariants", {'o'}},
  };
  return specs;
}

bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  static const std::set<std::string, std::less<>> reserved = {"empty", "emb", "id", "zero", "ring", "matrix",
                                                               "cospan", "morphism"};
  return !reserved.contains(s);
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Splits "lhs <sep> rhs" at the first occurrence of sep.
bool split_once(std::string_view s, std::string_view sep, std::string_view& lhs, std::string_view& rhs) {
  auto k = s.find(sep);
  if (k == std::string_view::npos) return false;
  lhs = trim(s.substr(0, k));
  rhs = trim(s.substr(k + sep.size()));
  return true;
}

template <class Ring>
class Parser {
 public:
  explicit Parser(Ring ring) { st_.ring = std::move(ring); }

  void line(std::size_t no, std::string_view text) {
    line_ = no;
    auto w = words(text);
    const std::string& head = w.front();
    if (head == "ring") fail("the ring must be declared once, before anything else");
    else if (head == "matrix") matrix(text);
    else if (head == "cospan") cospan(text);
    else if (head == "morphism") morphism(text);
    else if (head == "validate") validate(text);
    else command(text, w);
  }

  SessionState<Ring> finish() { return std::move(st_); }

 private:
  using M = rings::Matrix<Ring>;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }

  // Rewrites errors from the library with this line number.
  template <class F>
  auto guarded(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError& e) {
      if (e.line()) throw;
      fail(e.what());
    } catch (const IllDefinedMorphism& e) {
      fail(e.what());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  void declare(const std::string& name) {
    if (!is_name(name)) fail("bad name '" + name + "'");
    if (st_.matrices.contains(name) || st_.objects.contains(name) || st_.morphisms.contains(name))
      fail("name '" + name + "' is already declared");
  }

  // A matrix name or an inline literal.
  M matrix_ref(std::string_view s) {
    s = trim(s);
    if (s.empty()) fail("expected a matrix");
    if (s.front() == '[' || s.find(':') != std::string_view::npos)
      return guarded([&] { return rings::parse_matrix(st_.ring, s); });
    auto it = st_.matrices.find(s);
    if (it == st_.matrices.end()) fail("unknown matrix '" + std::string(s) + "'");
    return it->second;
  }

  const qcat::QObject<Ring>& object_ref(std::string_view s) {
    auto it = st_.objects.find(trim(s));
    if (it == st_.objects.end()) fail("unknown cospan '" + std::string(trim(s)) + "'");
    return it->second;
  }

  // matrix NAME ROWS COLS LITERAL
  void matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string kw, name, r, c;
    in >> kw >> name >> r >> c;
    std::string literal;
    std::getline(in, literal);
    if (literal.empty() || c.empty()) fail("usage: matrix NAME ROWS COLS LITERAL");
    declare(name);
    const std::size_t rows = guarded([&] { return rings::detail::parse_count(r); });
    const std::size_t cols = guarded([&] { return rings::detail::parse_count(c); });
    M m = guarded([&] { return rings::parse_matrix(st_.ring, literal); });
    if (m.rows() != rows || m.cols() != cols)
      fail("matrix '" + name + "' declared " + r + "x" + c + " but the literal is " + std::to_string(m.rows()) + "x" +
           std::to_string(m.cols()));
    st_.matrices.emplace(name, std::move(m));
  }

  // cospan NAME = GAMMA [| RHO]   or   cospan NAME = emb N
  void cospan(std::string_view text) {
    std::string_view lhs, rhs;
    if (!split_once(text.substr(6), "=", lhs, rhs)) fail("usage: cospan NAME = GAMMA | RHO");
    const std::string name(lhs);
    declare(name);
    auto w = words(rhs);
    if (!w.empty() && w[0] == "emb") {
      if (w.size() != 2) fail("usage: cospan NAME = emb RANK");
      const std::size_t n = guarded([&] { return rings::detail::parse_count(w[1]); });
      st_.objects.emplace(name, qcat::emb(st_.ring, n));
      return;
    }
    std::string_view g = rhs, r;
    bool has_rho = split_once(rhs, "|", g, r);
    M gamma = matrix_ref(g);
    M rho = (!has_rho || r == "empty") ? M(st_.ring, 0, gamma.cols()) : matrix_ref(r);
    st_.objects.emplace(name, guarded([&] { return qcat::QObject<Ring>(gamma, rho); }));
  }

  // (X -> Y = MAT) shared by morphism and validate.
  struct Arrow {
    qcat::QObject<Ring> src, dst;
    M alpha;
  };

  Arrow arrow(std::string_view spec, const char* usage) {
    std::string_view ends, mat, x, y;
    if (!split_once(spec, "=", ends, mat) || !split_once(ends, "->", x, y)) fail(usage);
    const auto& src = object_ref(x);
    const auto& dst = object_ref(y);
    M alpha = mat == "id"     ? M::identity(st_.ring, src.source_rank())
              : mat == "zero" ? M(st_.ring, src.source_rank(), dst.source_rank())
                              : matrix_ref(mat);
    return {src, dst, std::move(alpha)};
  }

  // morphism NAME : X -> Y = MAT
  void morphism(std::string_view text) {
    std::string_view lhs, rhs;
    if (!split_once(text.substr(8), ":", lhs, rhs)) fail("usage: morphism NAME : X -> Y = MATRIX");
    const std::string name(lhs);
    declare(name);
    Arrow a = arrow(rhs, "usage: morphism NAME : X -> Y = MATRIX");
    auto m = guarded([&] { return qcat::make_qmorphism(a.src, a.dst, a.alpha); });
    st_.morphisms.emplace(name, std::move(m));
  }

  // validate X -> Y = MAT: a well-definedness query that does not abort.
  void validate(std::string_view text) {
    Arrow a = arrow(text.substr(8), "usage: validate X -> Y = MATRIX");
    if (a.alpha.rows() != a.src.source_rank() || a.alpha.cols() != a.dst.source_rank())
      fail("validate: matrix shape does not match the endpoints");
    std::string_view ends, mat, x, y;
    split_once(text.substr(8), "=", ends, mat);
    split_once(ends, "->", x, y);
    st_.inline_matrices.emplace(line_, a.alpha);
    st_.commands.push_back({line_, std::string(trim(text)), "validate", {std::string(x), std::string(y)}});
  }

  void command(std::string_view text, const std::vector<std::string>& w) {
    for (const auto& spec : command_specs()) {
      if (w[0] != spec.verb) continue;
      if (w.size() != spec.kinds.size() + 1)
        fail(std::string(spec.verb) + " takes " + std::to_string(spec.kinds.size()) + " argument(s)");
      for (std::size_t k = 0; k < spec.kinds.size(); ++k) {
        const std::string& arg = w[k + 1];
        if (spec.kinds[k] == 'm' && !st_.morphisms.contains(arg)) fail("unknown morphism '" + arg + "'");
        if (spec.kinds[k] == 'o' && !st_.objects.contains(arg)) fail("unknown cospan '" + arg + "'");
      }
      st_.commands.push_back({line_, std::string(trim(text)), w[0], {w.begin() + 1, w.end()}});
      return;
    }
    fail("unknown command '" + w[0] + "'");
  }

  SessionState<Ring> st_;
  std::size_t line_ = 0;
};

struct Line {
  std::size_t no;
  std::string_view text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t no = 0;
  while (!text.empty() || no == 0) {
    ++no;
    auto nl = text.find('\n');
    std::string_view l = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (!l.empty()) out.push_back({no, l});
    if (nl == std::string_view::npos) break;
  }
  return out;
}

std::uint32_t ring_modulus(std::string_view arg, std::size_t line) {
  if (arg.empty()) return rings::PrimeField::kDefaultPrime;
  if (arg.front() != '(' || arg.back() != ')') throw ParseError("bad ring modulus '" + std::string(arg) + "'", line);
  try {
    std::size_t p = rings::detail::parse_count(arg.substr(1, arg.size() - 2));
    if (p > 0xFFFFFFFFu) throw std::invalid_argument("modulus too large");
    rings::PrimeField check(static_cast<std::uint32_t>(p));
    return check.characteristic();
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line);
  }
}

template <class Ring>
SessionImpl parse_with(Ring ring, const std::vector<Line>& lines, std::size_t first) {
  Parser<Ring> p(std::move(ring));
  for (std::size_t i = first; i < lines.size(); ++i) p.line(lines[i].no, lines[i].text);
  return SessionImpl{p.finish()};
}

}  // namespace
}  // namespace detail

std::size_t Session::command_count() const {
  return std::visit([](const auto& st) { return st.commands.size(); }, impl_->state);
}

std::string Session::ring_name() const {
  return std::visit([](const auto& st) { return st.ring.name(); }, impl_->state);
}

Session parse_session(std::string_view text) {
  using namespace detail;
  const auto lines = significant_lines(text);
  std::size_t first = 0;
  std::string tag = "Z";
  std::size_t ring_line = 0;
  if (!lines.empty() && words(lines[0].text).front() == "ring") {
    auto w = words(lines[0].text);
    if (w.size() != 2) throw ParseError("usage: ring Z | GF(p) | NC(p)", lines[0].no);
    tag = w[1];
    ring_line = lines[0].no;
    first = 1;
  }
  if (tag == "Z") return Session(std::make_shared<SessionImpl>(parse_with(rings::IntegerRing(), lines, first)));
  if (tag.starts_with("GF"))
    return Session(std::make_shared<SessionImpl>(
        parse_with(rings::PrimeField(ring_modulus(std::string_view(tag).substr(2), ring_line)), lines, first)));
  if (tag.starts_with("NC"))
    return Session(std::make_shared<SessionImpl>(parse_with(
        noncoherent::NoncoherentRing(rings::PrimeField(ring_modulus(std::string_view(tag).substr(2), ring_line))),
        lines, first)));
  throw ParseError("unknown ring '" + tag + "' (expected Z, GF(p) or NC(p))", ring_line);
}

}  // namespace subq::cli
