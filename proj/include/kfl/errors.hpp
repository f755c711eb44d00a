#pragma once

#include <stdexcept>
#include <string>

namespace kfl {

/// Malformed or out-of-range input: bad dimensions, unparsable coordinates,
/// parameters outside an operation's domain.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input violates a general-position requirement (affine dependence,
/// repeated points, ...).
class DegeneracyError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A seeded generator ran out of retries.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kfl
