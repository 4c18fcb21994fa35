#pragma once

#include <stdexcept>
#include <string>

namespace trmod {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad ring spec, bad expression, shape mismatch.
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A bounded search could not finish. Never a negative answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace trmod
