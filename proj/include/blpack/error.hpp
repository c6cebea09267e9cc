#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blpack {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid input document (bad syntax, bad dims, duplicate ids, ...).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// An operation that is only defined on feasible packings was given an infeasible one.
struct FeasibilityError : Error {
    explicit FeasibilityError(const std::string& what) : Error(what) {}
};

/// extract_sequence was given a packing that is feasible but not bottom-left stable.
struct StabilityError : Error {
    explicit StabilityError(const std::string& what) : Error(what) {}
};

/// A placement sequence failed certificate checking.
struct ReplayError : Error {
    enum class Kind { kNotACorner, kDuplicateId, kUnknownId };

    ReplayError(Kind kind, std::size_t action_index, const std::string& what)
        : Error(what), kind(kind), action_index(action_index) {}

    Kind kind;
    std::size_t action_index;
};

}  // namespace blpack
