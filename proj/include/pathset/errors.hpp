#pragma once

#include <stdexcept>
#include <string>

namespace pathset {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates an invariant (self-loop, broken chain, bad identity, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A name lookup failed (edge id, property, path set, attribute).
class NameError : public Error {
public:
    using Error::Error;
};

/// A configured enumeration limit was exceeded.
class LimitError : public Error {
public:
    using Error::Error;
};

/// A document could not be parsed into valid domain objects.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace pathset
