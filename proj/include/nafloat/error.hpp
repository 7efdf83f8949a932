#pragma once

#include <stdexcept>
#include <string>

namespace nafloat {

// Domain failure carrying a short machine-readable code ("malformed",
// "range", "no-meaning", ...). The CLI prints it as `error: <code>: <what>`.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace nafloat
