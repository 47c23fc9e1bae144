#include "mongraph/errors.hpp"

namespace mongraph {

int exit_code(ErrorKind kind) noexcept
{
  switch (kind) {
  case ErrorKind::Parse:
    return 2;
  case ErrorKind::Precondition:
    return 3;
  case ErrorKind::Bound:
    return 4;
  case ErrorKind::Verification:
    return 5;
  }
  return 5;
}

} // namespace mongraph
