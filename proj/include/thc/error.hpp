#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace thc {

// Contract violations: mismatched shapes, unresolved names, non-commuting
// input squares. `code` is a short stable tag, message is human-readable.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, const std::string& code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace thc
