#pragma once

#include <stdexcept>
#include <string>

namespace flawset {

/// Malformed or out-of-domain input: bad preference set, specification,
/// composition, or path word.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but violates an operation's precondition
/// (e.g. an unordered set passed to omega).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A closed form produced a non-integral quotient or a recurrence
/// right-hand side was not divisible as required.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Coefficient requested beyond a series' truncation order.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace flawset
