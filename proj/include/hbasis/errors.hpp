#ifndef HBASIS_ERRORS_HPP
#define HBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hbasis {

/// Malformed input document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid complex or inconsistent run configuration.
class ValidateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Resource guard tripped (oracle problem size limits).
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant the algorithms rely on was broken; reaching this
/// signals a bug upstream, not bad user input.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hbasis

#endif
