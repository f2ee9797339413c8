#pragma once

#include <stdexcept>
#include <string>

namespace lps {

// Base class for every error raised by the library. The CLI maps subclasses
// of InputError to exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class DegenerateInput : public InputError {
public:
    using InputError::InputError;
};

class Unbounded : public InputError {
public:
    using InputError::InputError;
};

class Infeasible : public InputError {
public:
    using InputError::InputError;
};

class SingularMatrix : public InputError {
public:
    using InputError::InputError;
};

class CellBudgetExceeded : public InputError {
public:
    using InputError::InputError;
};

class UnknownIdentity : public InputError {
public:
    using InputError::InputError;
};

class OutOfRange : public InputError {
public:
    using InputError::InputError;
};

class NotConstant : public Error {
public:
    using Error::Error;
};

class InsufficientSamples : public Error {
public:
    using Error::Error;
};

} // namespace lps
