#pragma once

#include <stdexcept>
#include <string>

namespace syzstab {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (curve records, divisors, polynomials, JSON jobs).
struct parse_error : error {
    using error::error;
};

/// A documented precondition was violated; the message names it.
struct domain_error : error {
    using error::error;
};

/// An internal consistency check failed. Always a bug, never user error.
struct internal_error : error {
    using error::error;
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace syzstab
