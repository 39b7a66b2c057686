#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tkr {

// Error codes double as the machine-readable strings the CLI prints on stderr.
class error : public std::runtime_error {
public:
  error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw error(std::move(code), message);
}

}  // namespace tkr
