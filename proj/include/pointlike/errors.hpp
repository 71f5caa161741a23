#pragma once

#include <stdexcept>
#include <string>

namespace pointlike {

// Malformed input data (bad file, non-associative table, invalid arguments).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable cap (closure size, flag count, ...) was exceeded.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check of the certificate construction failed.
struct CertificateError : std::runtime_error {
  explicit CertificateError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pointlike
