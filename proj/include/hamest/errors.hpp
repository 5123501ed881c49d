#pragma once

#include <stdexcept>
#include <string>

namespace hamest {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape/layout mismatches: wrong matrix sizes, incompatible layouts, bad indices.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Structurally valid input outside an operation's domain (e.g. asking for the
// minimum discrimination time of two identical Hamiltonians).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

} // namespace hamest
