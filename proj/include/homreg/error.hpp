#pragma once

#include <stdexcept>
#include <string>

namespace homreg {

// Precondition violated by the caller (bad arguments, malformed input).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A construction or bundled data file failed its own self-check.
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Reading or writing a file failed.
class IoError : public Error {
public:
    using Error::Error;
};

// A computation was refused because it would exceed the configured limits.
class RefusedError : public Error {
public:
    using Error::Error;
};

} // namespace homreg
