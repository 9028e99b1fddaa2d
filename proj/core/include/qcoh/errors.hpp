#pragma once

#include <stdexcept>
#include <string>

namespace qcoh {

// Violated operation precondition (bad genus, degree imbalance, signature
// mismatch, ...). The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Broken internal invariant; never expected on any input. Exit code 1.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition)
        throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
    if (!condition)
        throw InternalError(message);
}

} // namespace qcoh
