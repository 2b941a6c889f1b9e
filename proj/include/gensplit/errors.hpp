#pragma once

#include <stdexcept>
#include <string>

namespace gensplit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied something malformed or out of range.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The request is well formed but outside what the registry or rule tables cover.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A text input (registry override, invariants file, condition string) failed to parse.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : InvalidInput(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Data or internal consistency failure: a registry entry contradicts the
/// pipeline, or a classification that must succeed did not.
class Inconsistency : public Error {
public:
    using Error::Error;
};

class NoAmbientMatch : public Inconsistency {
public:
    using Inconsistency::Inconsistency;
};

class AmbiguousMatch : public Inconsistency {
public:
    using Inconsistency::Inconsistency;
};

} // namespace gensplit
