#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vknot {

// All library failures carry a stable machine-readable code alongside the
// human-readable message. The CLI maps codes onto exit statuses and error
// JSON; library users can switch on code() without parsing messages.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace vknot
