#pragma once

#include <stdexcept>
#include <string>

namespace serrewt {

/// Raised for p = 2 and for anything that is not an odd prime.
class UnsupportedPrime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Caller supplied data outside a type's invariants (bad weight, bad param,
/// malformed JSON record).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A level-2 exponent that is divisible by p+1, i.e. a level-1 character.
class LevelOneError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal invariant was breached. Always an implementation bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Throws UnsupportedPrime unless p is an odd prime small enough that p^2
/// fits comfortably in 32 bits.
void require_odd_prime(int p);

bool is_prime(long long n);

}  // namespace serrewt
