#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace subq::cli {

namespace detail {
struct SessionImpl;
}

/// A parsed session: ring, named matrices, cospans and morphisms (all
/// resolved and validated) plus the command list.
class Session {
 public:
  explicit Session(std::shared_ptr<const detail::SessionImpl> impl) : impl_(std::move(impl)) {}
  const detail::SessionImpl& impl() const { return *impl_; }
  std::size_t command_count() const;
  std::string ring_name() const;

 private:
  std::shared_ptr<const detail::SessionImpl> impl_;
};

/// Throws ParseError (with the line number) on the first problem.
Session parse_session(std::string_view text);

struct RunOptions {
  bool verify_witnesses = false;
};

struct Report {
  std::string text;
  int exit_code = 0;  // 0 ok, 1 some command failed, 2 the session did not parse
};

Report run_session(const Session& session, const RunOptions& options = {});

/// parse_session + run_session; a parse error yields exit code 2.
Report run_text(std::string_view text, const RunOptions& options = {});

}  // namespace subq::cli
