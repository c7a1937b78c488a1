#pragma once

#include <stdexcept>
#include <string>

namespace latext {

enum class ErrorKind {
  kInvalidInput,  // schema or precondition violation
  kInfeasible,    // enumeration limit, no candidate within bound
};

class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& message) {
  throw LatticeError(ErrorKind::kInvalidInput, message);
}

[[noreturn]] inline void fail_infeasible(const std::string& message) {
  throw LatticeError(ErrorKind::kInfeasible, message);
}

}  // namespace latext
