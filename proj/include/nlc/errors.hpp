#pragma once

#include <stdexcept>
#include <string>

namespace nlc {

/// Raised when an exhaustive operation would exceed the configured size limit.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlc
