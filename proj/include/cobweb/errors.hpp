#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cobweb/numeric.hpp"

namespace cobweb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Access past a custom sequence's stored prefix.
struct IndexOutOfRange : Error {
    using Error::Error;
};

// k > n, bad layer bounds and the like.
struct InvalidRange : Error {
    using Error::Error;
};

struct InvalidPermutation : Error {
    using Error::Error;
};

// Rejected sequence data: zero entries at positive index, bad F_0, bad JSON.
struct InvalidSequence : Error {
    using Error::Error;
};

struct ZeroLevel : Error {
    using Error::Error;
};

struct MissingLevels : Error {
    using Error::Error;
};

struct CycleDetected : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct TruncationTooSmall : Error {
    using Error::Error;
};

struct NotAdmissible : Error {
    using Error::Error;
};

class EnumerationCapExceeded : public Error {
public:
    EnumerationCapExceeded(const std::string& msg, Integer count)
        : Error(msg), count_(std::move(count)) {}

    // Exact cardinality that broke the cap (may be partial for path walks).
    const Integer& count() const noexcept { return count_; }

private:
    Integer count_;
};

}  // namespace cobweb
