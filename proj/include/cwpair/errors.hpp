#pragma once

#include <stdexcept>
#include <string>

namespace cwpair {

/// A violated precondition or domain invariant (coprimality, zero
/// denominator, asymmetric polynomial, ...). The CLI maps these to exit 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (rationals, polynomials, slopes, catalog files).
/// The CLI maps these to exit 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cwpair
