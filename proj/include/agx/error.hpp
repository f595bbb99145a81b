#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace agx {

// Domain error with a machine-readable kind tag. The CLI turns these into a
// JSON object on stderr and exit code 1.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

}  // namespace agx
