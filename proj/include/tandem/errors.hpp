#pragma once

#include <stdexcept>
#include <string>

namespace tandem {

// Argument outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Received data that no encoder could have produced.
class CorruptInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Word whose root is longer than any codeword root.
class NotDescendantError : public CorruptInputError {
public:
    using CorruptInputError::CorruptInputError;
};

// Edge (x, x') exists but carries no message label.
class UnlabeledEdgeError : public CorruptInputError {
public:
    using CorruptInputError::CorruptInputError;
};

// A materialized table would exceed the configured size limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tandem
