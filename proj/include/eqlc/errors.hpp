#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqlc {

/// Bad parameter: not an odd prime, f not an even divisor of p-1, and so on.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Input exceeds a representable range (128-bit moduli, residue bounds).
class RangeError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

/// A search refused to run because it would exceed a configured limit.
/// `limit_name()` is the name of the violated limit (e.g. "pattern_budget").
class ResourceLimitError : public std::runtime_error {
   public:
    ResourceLimitError(std::string limit_name, const std::string& what)
        : std::runtime_error(what), limit_name_(std::move(limit_name)) {}

    const std::string& limit_name() const noexcept { return limit_name_; }

   private:
    std::string limit_name_;
};

/// An internal construction produced an inconsistent object (coverage gaps,
/// disagreeing routes). Never expected for valid inputs.
class ConstructionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace eqlc
