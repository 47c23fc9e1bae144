#ifndef MONGRAPH_ERRORS_HPP
#define MONGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mongraph {

// Broad failure classes; each maps to one CLI exit code.
enum class ErrorKind {
  Parse,         // malformed input text
  Precondition,  // mathematically invalid input (NotInvolution, ...)
  Bound,         // element bound or search budget exceeded
  Verification   // an internal cross-check failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string &what)
  : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code))
  {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string &code() const noexcept { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

inline Error parse_error(const std::string &what)
{ return Error(ErrorKind::Parse, "ParseError", what); }

inline Error precondition_error(std::string code, const std::string &what)
{ return Error(ErrorKind::Precondition, std::move(code), what); }

inline Error bound_error(std::string code, const std::string &what)
{ return Error(ErrorKind::Bound, std::move(code), what); }

inline Error verification_error(std::string code, const std::string &what)
{ return Error(ErrorKind::Verification, std::move(code), what); }

int exit_code(ErrorKind kind) noexcept;

} // namespace mongraph

#endif // MONGRAPH_ERRORS_HPP
