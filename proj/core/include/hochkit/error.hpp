#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hochkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    Error(std::string stage, const std::string& message, std::string witness = {})
        : std::runtime_error(message), stage_(std::move(stage)), witness_(std::move(witness)) {}

    /// Short machine-readable tag of the check that failed ("associativity", "ring", ...).
    [[nodiscard]] const std::string& stage() const noexcept { return stage_; }
    /// Human-readable location of the failure, e.g. "(1,1,1)"; empty when not applicable.
    [[nodiscard]] const std::string& witness() const noexcept { return witness_; }

   private:
    std::string stage_;
    std::string witness_;
};

/// Input data violates an algebraic axiom or a shape requirement.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A matrix would exceed the configured entry limit.
class SizeGuardError : public Error {
   public:
    using Error::Error;
};

}  // namespace hochkit
