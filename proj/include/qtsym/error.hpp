#pragma once

#include <stdexcept>
#include <string>

namespace qtsym {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by zero, pole under specialization, and similar arithmetic faults.
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& what) : Error(what) {}
};

/// Violated precondition (bad indices, size mismatches, malformed input).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// An internal consistency assertion failed. These are correctness tripwires:
/// a throw here means a bug, not bad input.
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& what) : Error(what) {}
};

#define QTSYM_CHECK(cond, msg)                         \
    do {                                               \
        if (!(cond)) throw ::qtsym::ConsistencyError(msg); \
    } while (0)

}  // namespace qtsym
