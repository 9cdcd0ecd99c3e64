#pragma once

#include <stdexcept>
#include <string>

namespace bdt {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed inputs: non-normalized distributions, dimension mismatches,
/// out-of-range parameters.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// An argument fell outside a utility model's legal domain (e.g. a loss at
/// or below the significance threshold).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A numeric solve failed, e.g. no fair probability exists in (0, 1).
class SolveError : public Error {
public:
    explicit SolveError(const std::string& what) : Error(what) {}
};

} // namespace bdt
