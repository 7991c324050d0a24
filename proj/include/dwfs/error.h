#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dwfs {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition (non-positive program
// handed to a positive-only operator, stale transformation step, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An exhaustive oracle or saturation exceeded its configured bound.
class CapacityError : public Error {
public:
    CapacityError(const std::string& what, std::size_t size, std::size_t limit)
        : Error(what + " (size " + std::to_string(size) + " exceeds limit " + std::to_string(limit) + ")")
        , size_(size)
        , limit_(limit) {}
    std::size_t size() const noexcept { return size_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t size_;
    std::size_t limit_;
};

// A partial operator was applied where it is undefined.
class UndefinedOperatorError : public Error {
public:
    using Error::Error;
};

} // namespace dwfs
