#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

// Bad argument to a library call (empty range, modulus < 2, r <= 0, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain where a formula is valid.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Records fed to an accumulator out of ascending prime order.
class OrderingError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Snapshot requested from an accumulator that has seen no primes.
class EmptyAccumulator : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The runner declined to start or continue (ineligible seed, stale or
// corrupted store). Maps to exit code 2.
class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem failure while reading or writing a result store. Exit code 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace orbitlab
