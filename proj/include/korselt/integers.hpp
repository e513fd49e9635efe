#pragma once

#include <gmpxx.h>

#include <vector>

#include "korselt/error.hpp"

namespace korselt {

// All integer arithmetic is arbitrary precision. Values like q^(l-1)+q-1
// overflow 64 bits already at desk scale, and the constructive routines
// routinely build prime powers with hundreds of digits.
using Int = mpz_class;

struct Factor {
    Int prime;
    unsigned exponent;
};
using FactorList = std::vector<Factor>;

// Divisors up to this bound are tried before factorization gives up.
inline constexpr unsigned long kDefaultFactorBound = 1'000'000'000UL;

// Exponents and totient arguments above this abort constructive searches.
inline constexpr unsigned long kDefaultExponentBudget = 1'000'000UL;

/// gcd of |a| and |b|; gcd(0,0) = 0.
Int gcd(const Int& a, const Int& b);

/// Mathematical floor of a/b. Requires b >= 1.
Int floor_div(const Int& a, const Int& b);

/// Mathematical ceiling of a/b. Requires b >= 1.
Int ceil_div(const Int& a, const Int& b);

/// base^exp, exact.
Int pow_int(const Int& base, unsigned long exp);

/// Deterministic primality test. Below an internal threshold (about 3.3e24,
/// covering every 64-bit value) a fixed Miller-Rabin witness set is
/// exhaustive; above it certification falls back to trial division and
/// throws budget_error when the budget cannot settle the question.
bool is_prime(const Int& n);

/// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

/// Complete prime factorization of n >= 2, primes ascending. Trial division
/// up to trial_bound; an unfactored cofactor is a budget_error, never a
/// silent partial answer.
FactorList factorize(const Int& n, unsigned long trial_bound = kDefaultFactorBound);

/// Positive divisors of n >= 1, ascending. Generated from the factorization.
std::vector<Int> divisors(const Int& n, unsigned long trial_bound = kDefaultFactorBound);

/// Divisor count sigma_0(n) for n >= 1.
Int sigma0(const Int& n, unsigned long trial_bound = kDefaultFactorBound);

/// Euler totient of n >= 1, computed from the factorization.
Int euler_phi(const Int& n, unsigned long trial_bound = kDefaultFactorBound);

} // namespace korselt
