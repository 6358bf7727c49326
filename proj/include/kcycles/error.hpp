#pragma once

#include <stdexcept>
#include <string>

namespace kcycles {

enum class ErrorCode {
  malformed_input,
  domain,
  empty_population,
  unsupported,
  resource,
  internal,
  render,
  network,
};

const char* to_string(ErrorCode code) noexcept;

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

}  // namespace kcycles
