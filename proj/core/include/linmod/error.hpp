#pragma once

#include <stdexcept>
#include <string>

namespace linmod {

// Error taxonomy shared by the library and the command line tool.
// The tool maps kinds onto process exit codes; the library only throws.
enum class ErrorKind {
  Input,        // malformed file or configuration value
  Syntax,       // formula text does not parse
  Arity,        // letter applied to the wrong number of arguments
  Undeclared,   // unknown letter or variable name
  Unsupported,  // recognized construct that is deliberately rejected
  Guard,        // size, step, or search bound exceeded
  Internal,     // broken invariant inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace linmod
