#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gobelin {

// Error taxonomy; the numeric values double as C API status codes and
// CLI exit codes.
enum class ErrorKind {
  Input = 2,       // malformed input: grammar, shapes, arity
  Hypothesis = 3,  // NotTangent, InfiniteDimB, NotIsolatedSingularity
  Resource = 4,    // degree cap exceeded
  Internal = 5,    // inconsistency tripwires, broken invariants
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& msg)
      : std::runtime_error(msg), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }

  // Stable machine-readable tag, e.g. "NotTangent".
  const std::string& code() const { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void throw_input(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Input, code, msg);
}
[[noreturn]] inline void throw_hypothesis(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Hypothesis, code, msg);
}
[[noreturn]] inline void throw_resource(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Resource, code, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
  throw Error(ErrorKind::Internal, "Internal", msg);
}

}  // namespace gobelin
