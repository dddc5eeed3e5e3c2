#pragma once

#include <stdexcept>
#include <string>

namespace edgepoly {

/// Malformed input: bad vertex labels, loops, empty sets, parameters out of range.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed input outside an operation's mathematical domain
/// (isolated vertices, disconnected graphs, too few edges).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A size cap was exceeded without an explicit override.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgepoly
