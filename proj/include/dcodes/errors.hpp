#pragma once

#include <stdexcept>
#include <string>

namespace dcodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different fields or groups were combined.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// (q, p, m) violates gcd(2p^m, q) = 1 or q does not generate U(Z_{p^m}),
/// or a modulus/prime argument is not prime.
class InadmissibleParameters : public Error {
public:
    using Error::Error;
};

/// An exhaustive computation would exceed the configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Division by zero, singular solve, or an element with no inverse in its component.
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// A construction produced an object that fails its own defining identities.
class InternalCheckFailed : public Error {
public:
    using Error::Error;
};

}  // namespace dcodes
