#pragma once

#include <stdexcept>
#include <string>

namespace arakx0 {

enum class ErrorCode {
  InvalidArgument = 1,
  NotPrime,
  Domain,
  Pole,
  Truncation,
  NotStabilized,
  Inconsistent,
};

// All library failures are reported through this type; the C API maps the
// code one-to-one onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace arakx0
