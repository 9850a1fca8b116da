#pragma once

#include <stdexcept>
#include <string>

namespace homwb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad references, non-simplicial maps, parse failures.
class InputError : public Error {
public:
    using Error::Error;
};

/// A structural invariant was violated (d^2 != 0, ill-defined homomorphism, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

} // namespace homwb
