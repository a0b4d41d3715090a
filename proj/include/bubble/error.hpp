#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bubble {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (not a cover, not a face, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A resource guard refused to start an exhaustive computation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Resource guards are advisory; `ignore` lets a caller run past them.
enum class CapPolicy { enforce, ignore };

/// Throws CapExceeded when `value > cap` and the policy enforces caps.
inline void require_within_cap(std::string_view what, long long value, long long cap,
                               CapPolicy policy) {
  if (policy == CapPolicy::enforce && value > cap) {
    throw CapExceeded("instance too large: " + std::string(what) + " = " + std::to_string(value) +
                      " exceeds cap " + std::to_string(cap) + " (use --force to override)");
  }
}

}  // namespace bubble
