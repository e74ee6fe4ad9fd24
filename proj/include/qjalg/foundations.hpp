#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qjalg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its domain (bad weight, n = 0, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal cross-check between two algebraic routes fails.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Canonical rational num/den. Throws DomainError on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Parses "p" or "p/q" (optional leading '-'). Throws DomainError when malformed.
Rational parse_rational(const std::string& text);

/// Always "p/q", including q = 1.
std::string rational_to_pq(const Rational& r);

/// B_n from t/(e^t - 1); B_1 = -1/2. Memoized, thread-safe.
Rational bernoulli(unsigned n);

/// Sum of d^(k-1) over the positive divisors d of n.
BigInt sigma(unsigned k, std::uint64_t n);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt factorial(unsigned n);

}  // namespace qjalg
