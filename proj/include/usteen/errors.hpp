#pragma once

#include <stdexcept>
#include <string>

namespace usteen {

/* Base class for every error thrown by the library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotOddPrime : Error {
    explicit NotOddPrime(long long p) : Error("not an odd prime: " + std::to_string(p)) {}
};

struct NegativeInput : Error {
    explicit NegativeInput(long long m) : Error("negative input: " + std::to_string(m)) {}
};

/* The exact binomial oracle rejects a negative top argument instead of
   mapping it to zero; the extended mod-p binomial does the opposite. */
struct NegativeTop : Error {
    explicit NegativeTop(long long a) : Error("negative top argument: " + std::to_string(a)) {}
};

struct IndexOverflow : Error {
    IndexOverflow() : Error("integer index out of range") {}
    explicit IndexOverflow(const std::string& what) : Error(what) {}
};

struct NegativeN : Error {
    explicit NegativeN(long long n) : Error("relation parameter n must be >= 0, got " + std::to_string(n)) {}
};

struct WrongLength : Error {
    explicit WrongLength(const std::string& what) : Error(what) {}
};

struct Inhomogeneous : Error {
    Inhomogeneous() : Error("polynomial terms have mixed lengths") {}
};

struct AlreadyAdmissible : Error {
    AlreadyAdmissible() : Error("pair is admissible, nothing to rewrite") {}
};

struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error(what) {}
};

struct NotInSubspace : Error {
    explicit NotInSubspace(const std::string& what) : Error(what) {}
};

struct ClosureViolation : Error {
    explicit ClosureViolation(const std::string& what) : Error(what) {}
};

struct BadEpsilon : Error {
    explicit BadEpsilon(long long eps) : Error("epsilon must be 0 or 1, got " + std::to_string(eps)) {}
};

struct SyntaxError : Error {
    std::size_t pos;
    std::string expected;
    SyntaxError(std::size_t pos_, std::string expected_)
        : Error("syntax error at position " + std::to_string(pos_) + ": expected " + expected_),
          pos(pos_),
          expected(std::move(expected_)) {}
};

}  // namespace usteen
