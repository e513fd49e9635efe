#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "korselt/core.hpp"

namespace korselt {

enum class GeneratorCase {
    below_q,       // d < q: value (m*q - d)/m, m >= 1
    multiple_of_q, // q | d: value m*q/(t_d + m), m >= 1
    mixed,         // d = t_d*q + r_d, both nonzero: value (m*q - r_d)/(t_d + m)
};

struct GeneratedBase {
    Int d;
    GeneratorCase case_tag;
    Int m;
    Rational value; // membership verified before return
};

enum class Route { coprime, dividing };

struct Construction {
    Rational base;
    PrimePower pp;
    Route route;
};

// A prime divisor q of the numerator that can never work: q divides
// a2 - a1/q, which forces q | 1 for every candidate exponent.
struct BlockedPrime {
    Int q;
    Int residue; // a2 - a1/q
};

// Outcome of the dividing-route search: either a verified construction or
// the full list of blocked primes explaining why none exists.
struct DividingSearch {
    std::optional<Construction> construction;
    std::vector<BlockedPrime> blocked;

    bool infeasible() const { return !construction.has_value(); }
};

/// All d <= bound whose totient divides l - 1. Each of them generates at
/// least one base of q^l for every prime q.
std::vector<Int> eligible_generators(unsigned long l, const Int& bound);

/// The case-appropriate generated base for divisor d and parameter m.
/// phi(d) must divide l - 1 (domain_error otherwise). Parameters whose value
/// degenerates (zero denominator, value 0 or q^l) or fails verification
/// raise skip_parameter; scanning m always finds a valid one.
GeneratedBase bases_from_divisor(const PrimePower& pp, const Int& d, const Int& m);

/// Scans m = 1..limit, then 0..-limit for the mixed case, and returns the
/// first base that verifies.
GeneratedBase first_base_from_divisor(const PrimePower& pp, const Int& d, long m_limit = 64);

/// A prime power p^k admitting alpha with gcd(numerator, p) = 1: p is the
/// smallest prime above |a1|, k = phi(a2*p - a1) + 1. Always succeeds.
Construction prime_power_for_base_coprime(const Rational& alpha,
                                          unsigned long max_exponent = kDefaultExponentBudget);

/// A prime power q^l admitting alpha with q | numerator, for |a1| != 1.
/// Tries the prime divisors of the numerator in ascending order with
/// l = phi(|a2 - a1/q|) + 1; primes with q | (a2 - a1/q) are blocked for
/// every l and reported instead (witness: alpha = 6/5 blocks both 2 and 3).
DividingSearch prime_power_for_base_dividing(const Rational& alpha,
                                             unsigned long max_exponent = kDefaultExponentBudget);

/// `count` distinct verified prime powers admitting alpha, grown from the
/// coprime-route seed (p, l1) along the exponents l1 + j*(l1 - 1).
std::vector<Construction> base_family(const Rational& alpha, unsigned long count,
                                      unsigned long max_exponent = kDefaultExponentBudget);

/// The unit-fraction bases of q^l: 1/q^(s-1) for every s | (l-1), and
/// -1/q^(s-1) additionally when (l-1)/s is even. Sorted ascending.
std::vector<Rational> unit_fraction_bases(const PrimePower& pp);

/// (sign/p in KS(q^l), sign/q in KS(p^l)) for distinct primes p, q. The two
/// booleans agree for sign = +1 at any l, and for sign = -1 when l is odd;
/// for even l the equivalence can fail, e.g. (p,q,l) = (2,3,4) with sign -1
/// gives (false, true).
std::pair<bool, bool> reciprocal_pair_holds(const Int& p, const Int& q, unsigned long l,
                                            int sign);

/// Every prime q coprime to the numerator with alpha in KS(q^l), by testing
/// all primes up to alpha + |alpha*a1^(l-2) - a2^(l-2)|; no member exists
/// above that bound. alpha in {0, 1} is rejected. Caveat: for alpha = -1 and
/// odd l the bound term vanishes and the returned list is empty, although
/// every prime admits -1 there (q+1 divides q^(l-1)-1 for even l-1).
std::vector<Int> feasible_primes(const Rational& alpha, unsigned long l);

} // namespace korselt
