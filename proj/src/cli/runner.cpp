#include <sstream>

#include "session_state.hpp"
#include "subq/oracle/oracle.hpp"

namespace subq::cli {

namespace detail {
namespace {

using rings::format;

class WitnessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Ring>
class Runner {
 public:
  Runner(const SessionState<Ring>& st, const RunOptions& opt, std::ostream& out) : st_(st), opt_(opt), out_(out) {}

  bool run(const Command& c) {
    out_ << "> " << c.text << "\n";
    try {
      dispatch(c);
      return true;
    } catch (const IllDefinedMorphism& e) {
      out_ << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
      out_ << "error: " << e.what() << "\n";
    }
    return false;
  }

 private:
  using M = rings::Matrix<Ring>;
  using Q = qcat::QMorphism<Ring>;
  using O = qcat::QObject<Ring>;

  const Q& mor(const std::string& n) const { return st_.morphisms.at(n); }
  const O& obj(const std::string& n) const { return st_.objects.at(n); }

  void check(bool ok, const char* what) {
    if (!opt_.verify_witnesses) return;
    if (!ok) throw WitnessFailure(std::string("witness check failed: ") + what);
  }
  void verified() {
    if (opt_.verify_witnesses) out_ << "verified: ok\n";
  }

  void print_object(const char* label, const O& x) {
    out_ << label << ": gamma=" << format(x.gamma()) << " rho=" << format(x.rho()) << "\n";
    if constexpr (std::is_same_v<Ring, rings::IntegerRing>)
      out_ << "invariants: " << oracle::evaluate(x.gamma(), x.rho()).format() << "\n";
  }

  void print_inclusion(const addcat::InclusionDecision<Ring>& d, const addcat::Cospan<Ring>& second) {
    if (!d) {
      out_ << "no, counterexample=" << format(*d.counterexample) << "\n";
      return;
    }
    M omegas(second.ring(), 0, second.relation_rank());
    for (const auto& w : d.generator_witnesses) omegas = rings::stack(omegas, w);
    out_ << "yes, generators=" << format(d.generators) << ", omegas=" << format(omegas) << "\n";
    if (opt_.verify_witnesses) {
      // For NC the generators live over the simplified first object A+C.
      const auto& g2 = d.generators.cols() == second.source_rank()
                           ? second.gamma()
                           : rings::stack(second.gamma(), M(second.ring(), d.generators.cols() - second.source_rank(),
                                                           second.target_rank()));
      for (std::size_t i = 0; i < d.generators.rows(); ++i)
        check(d.generators.row(i) * g2 == d.generator_witnesses[i] * second.rho(), "sigma*gamma' = omega*rho'");
      verified();
    }
  }

  void print_zero(const std::optional<M>& zeta, const Q& phi) {
    if (!zeta) {
      out_ << "no\n";
      return;
    }
    out_ << "yes, zeta=" << format(*zeta) << "\n";
    check(*zeta * phi.dst().rho() == phi.alpha() * phi.dst().gamma(), "zeta*rho = alpha*gamma");
    verified();
  }

  void dispatch(const Command& c) {
    const auto& v = c.verb;
    const auto& a = c.args;
    if (v == "validate") {
      const O& x = obj(a[0]);
      const O& y = obj(a[1]);
      const auto pushed = qcat::pushed_cospan(st_.inline_matrices.at(c.line), y);
      print_inclusion(addcat::syzygy_inclusion(x, pushed), pushed);
    } else if (v == "iszero") {
      print_zero(qcat::is_zero(mor(a[0])), mor(a[0]));
    } else if (v == "eq") {
      const auto diff = qcat::sub(mor(a[0]), mor(a[1]));
      print_zero(qcat::is_zero(diff), diff);
    } else if (v == "ismono") {
      const Q& phi = mor(a[0]);
      print_inclusion(addcat::syzygy_inclusion(qcat::pushed_cospan(phi.alpha(), phi.dst()), phi.src()), phi.src());
    } else if (v == "isepi") {
      const auto ck = qcat::cokernel(mor(a[0]));
      print_zero(qcat::is_zero(ck.proj), ck.proj);
    } else if (v == "cokernel") {
      const Q& phi = mor(a[0]);
      const auto ck = qcat::cokernel(phi);
      print_object("object", ck.object);
      out_ << "proj: " << format(ck.proj.alpha()) << "\n";
      if (opt_.verify_witnesses) {
        check(qcat::is_epi(ck.proj), "proj is epi");
        check(qcat::is_zero(qcat::compose(phi, ck.proj)).has_value(), "phi*proj = 0");
        verified();
      }
    } else if (v == "kernel") {
      const Q& phi = mor(a[0]);
      const auto k = qcat::kernel(phi);
      print_object("object", k.object);
      out_ << "kappa: " << format(k.kappa.alpha()) << "\n";
      if (opt_.verify_witnesses) {
        check(qcat::is_mono(k.kappa), "kappa is mono");
        check(qcat::is_zero(qcat::compose(k.kappa, phi)).has_value(), "kappa*phi = 0");
        verified();
      }
    } else if (v == "image") {
      const Q& phi = mor(a[0]);
      const auto f = qcat::epi_mono_factorization(phi);
      print_object("object", f.image);
      out_ << "epi: " << format(f.epi.alpha()) << "\n";
      out_ << "mono: " << format(f.mono.alpha()) << "\n";
      if (opt_.verify_witnesses) {
        check(qcat::eq(qcat::compose(f.epi, f.mono), phi), "epi*mono = phi");
        check(qcat::is_epi(f.epi), "epi is epi");
        check(qcat::is_mono(f.mono), "mono is mono");
        verified();
      }
    } else if (v == "lift-mono") {
      const Q& phi = mor(a[0]);
      const Q& tau = mor(a[1]);
      const auto l = qcat::lift_along_mono(phi, tau);
      out_ << "lift: " << format(l.alpha()) << "\n";
      check(qcat::eq(qcat::compose(l, phi), tau), "lift*phi = tau");
      verified();
    } else if (v == "colift-epi") {
      const Q& phi = mor(a[0]);
      const Q& tau = mor(a[1]);
      const auto l = qcat::colift_along_epi(phi, tau);
      out_ << "colift: " << format(l.alpha()) << "\n";
      check(qcat::eq(qcat::compose(phi, l), tau), "phi*colift = tau");
      verified();
    } else if (v == "homology") {
      print_object("object", qcat::homology_at(mor(a[0]), mor(a[1])));
    } else if (v == "syzincl") {
      print_inclusion(addcat::syzygy_inclusion(obj(a[0]), obj(a[1])), obj(a[1]));
    } else if (v == "invariants") {
      const O& x = obj(a[0]);
      if constexpr (std::is_same_v<Ring, rings::IntegerRing>) {
        out_ << oracle::evaluate(x.gamma(), x.rho()).format() << "\n";
      } else if constexpr (std::is_same_v<Ring, rings::PrimeField>) {
        const auto d = oracle::dimension(x.gamma(), x.rho());
        out_ << (d == 0 ? std::string("0") : x.ring().name() + (d == 1 ? "" : "^" + std::to_string(d))) << "\n";
      } else {
        throw CapabilityError("invariants unavailable: " + x.ring().name() + " has no finite normal form");
      }
    } else {
      throw std::logic_error("unhandled command " + v);
    }
  }

  const SessionState<Ring>& st_;
  const RunOptions& opt_;
  std::ostream& out_;
};

}  // namespace
}  // namespace detail

Report run_session(const Session& session, const RunOptions& options) {
  std::ostringstream out;
  bool ok = true;
  std::visit(
      [&](const auto& st) {
        using St = std::decay_t<decltype(st)>;
        detail::Runner<decltype(St::ring)> runner(st, options, out);
        for (const auto& c : st.commands) ok = runner.run(c) && ok;
      },
      session.impl().state);
  return {out.str(), ok ? 0 : 1};
}

Report run_text(std::string_view text, const RunOptions& options) {
  try {
    return run_session(parse_session(text), options);
  } catch (const ParseError& e) {
    return {std::string("error: ") + e.what() + "\n", 2};
  } catch (const std::exception& e) {
    return {std::string("error: ") + e.what() + "\n", 2};
  }
}

}  // namespace subq::cli
