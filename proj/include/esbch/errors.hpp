#ifndef ESBCH_ERRORS_HPP
#define ESBCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace esbch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimitivePolynomial final : Error {
    using Error::Error;
};
struct DegreeMismatch final : Error {
    using Error::Error;
};
struct DivisionByZero final : Error {
    using Error::Error;
};
struct LengthMismatch final : Error {
    using Error::Error;
};
struct CapacityExceeded final : Error {
    using Error::Error;
};
struct DomainError final : Error {
    using Error::Error;
};
struct NegativeProbability final : Error {
    using Error::Error;
};
struct BoundInvalid final : Error {
    using Error::Error;
};
struct InstanceTooLarge final : Error {
    using Error::Error;
};

} // namespace esbch

#endif
