#pragma once

#include <stdexcept>
#include <string>

namespace skeincalc {

/// Caller handed us something malformed (bad degree, size mismatch, ...).
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Two independent computation routes disagreed.  This is never a user
/// error: it means a bug in the library and is reported loudly.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

/// An exhaustive-enumeration operation was asked to exceed its documented
/// bound.  The operation refuses rather than approximating.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skeincalc
