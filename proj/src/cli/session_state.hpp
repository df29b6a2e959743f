#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "subq/cli/session.hpp"
#include "subq/noncoherent/noncoherent.hpp"
#include "subq/qcat/qcat.hpp"
#include "subq/rings/integer_ring.hpp"
#include "subq/rings/prime_field.hpp"

namespace subq::cli::detail {

struct Command {
  std::size_t line = 0;
  std::string text;
  std::string verb;
  std::vector<std::string> args;
};

template <class Ring>
struct SessionState {
  Ring ring;
  std::map<std::string, rings::Matrix<Ring>, std::less<>> matrices;
  std::map<std::string, qcat::QObject<Ring>, std::less<>> objects;
  std::map<std::string, qcat::QMorphism<Ring>, std::less<>> morphisms;
  // Matrix arguments of `validate`, resolved at parse time, keyed by line.
  std::map<std::size_t, rings::Matrix<Ring>> inline_matrices;
  std::vector<Command> commands;
};

struct SessionImpl {
  std::variant<SessionState<rings::IntegerRing>, SessionState<rings::PrimeField>,
               SessionState<noncoherent::NoncoherentRing>>
      state;
};

}  // namespace subq::cli::detail
