// qcat: batch front end for subquotient-category computations.
//
//   qcat run session.qs [--verify-witnesses]
//   qcat eval -e "ring Z; cospan X = [[1]] | [[2]]; invariants X"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subq/cli/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Subquotient categories over Z, GF(p) and the non-coherent ring NC(p)"};
  app.require_subcommand(1);
  subq::cli::RunOptions options;
  app.add_flag("--verify-witnesses", options.verify_witnesses, "Recheck every witness equation");

  std::string path;
  auto* run = app.add_subcommand("run", "Run a session file");
  run->add_option("file", path, "Session file")->required()->check(CLI::ExistingFile);
  run->add_flag("--verify-witnesses", options.verify_witnesses, "Recheck every witness equation");

  std::string text;
  auto* eval = app.add_subcommand("eval", "Run session text given inline; ';' separates lines");
  eval->add_option("-e,--expr", text, "Session text")->required();
  eval->add_flag("--verify-witnesses", options.verify_witnesses, "Recheck every witness equation");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::replace(text.begin(), text.end(), ';', '\n');
  }
  const auto report = subq::cli::run_text(text, options);
  if (report.exit_code == 2) std::cerr << report.text;
  else std::cout << report.text;
  return report.exit_code;
}
