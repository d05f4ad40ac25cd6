#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stargrundy {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error("parse error at byte " + std::to_string(offset) + ": " + message), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A Strip or Position violates its structural invariants.
class InvariantError : public Error {
public:
    using Error::Error;
};

class IllegalMove : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// A computation would exceed its configured node budget.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

// A certification ran out of steps before finding a state recurrence.
// Carries the sequence produced so far.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& message, std::vector<std::int64_t> partial)
        : Error(message), partial_(std::move(partial)) {}

    const std::vector<std::int64_t>& partial() const noexcept { return partial_; }

private:
    std::vector<std::int64_t> partial_;
};

// The row machine found no admissible value. Indicates a bug.
class MachineInconsistency : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class NotUnique : public Error {
public:
    using Error::Error;
};

}  // namespace stargrundy
