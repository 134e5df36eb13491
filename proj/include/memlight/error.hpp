#pragma once

#include <stdexcept>
#include <string>

namespace memlight {

// Base for every error the library raises. Messages are user-facing.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or malformed input data (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

// Corrupt, truncated or foreign index files (CLI exit code 3).
class IndexFormatError : public Error {
public:
    using Error::Error;
};

}  // namespace memlight
