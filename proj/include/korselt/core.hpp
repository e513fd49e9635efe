#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "korselt/rational.hpp"

namespace korselt {

// N = q^l with q prime and l >= 2; `value` is q^l exactly.
struct PrimePower {
    Int q;
    unsigned long l;
    Int value;

    PrimePower(Int q_, unsigned long l_);
};

// A base written as q + d/s with d a positive divisor of q^l - q and s a
// nonzero integer. Every rational Korselt base of q^l has this shape.
struct BaseForm {
    Int q;
    Int d;
    Int s;

    Rational value() const { return {q * s + d, s}; }
};

// One entry of the interval parametrization: value = q - d/den, with den
// drawn from the range prescribed for its divisor d. `value` is reduced, so
// it can have a smaller denominator than `den`.
struct IntervalBaseWitness {
    Int d;
    Int den;
    Rational value;
};

// Sorted deduplicated set of bases. Neither 0 nor N ever appears.
class KorseltSet {
public:
    KorseltSet() = default;

    /// Canonicalizes, drops 0 and n, sorts and deduplicates.
    static KorseltSet of(std::vector<Rational> candidates, const Int& n);

    const std::vector<Rational>& members() const& { return members_; }
    std::vector<Rational> members() && { return std::move(members_); } // safe on temporaries
    std::size_t weight() const { return members_.size(); }
    bool contains(const Rational& value) const;

    friend bool operator==(const KorseltSet& a, const KorseltSet& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<Rational> members_;
};

/// The Korselt divisibility predicate for general N >= 2: alpha = a1/a2 is a
/// base iff a2*p - a1 divides a2*N - a1 for every prime p | N, where zero
/// divides only zero. alpha in {0, N} is a domain_error, not a silent false;
/// factorization failures propagate as budget_error.
bool is_korselt(const Int& n, const Rational& alpha,
                unsigned long factor_bound = kDefaultFactorBound);

/// Prime-power specialization: alpha is a base of q^l iff (a2*q - a1)
/// divides q^l - q = q(q^(l-1) - 1). Agrees with is_korselt(q^l, alpha) on
/// the whole domain, without factoring anything.
bool is_prime_power_base(const PrimePower& pp, const Rational& alpha);

/// Set-membership form of the predicate: 0 and N are simply not members.
bool ks_member(const PrimePower& pp, const Rational& alpha);

/// The integer Korselt set of q^l: { q +- d : d | q^l - q } minus {0, q^l}.
KorseltSet ks_z(const PrimePower& pp);

/// Integer Korselt weight, closed form 4*sigma0(q^(l-1) - 1) - 2. Equals
/// ks_z(pp).weight().
Int kw_z(const PrimePower& pp);

/// All rational bases of q^l whose reduced denominator is at most max_den:
/// the sweep q +- d/s over divisors d of q^l - q and 1 <= s <= max_den,
/// reduced, deduplicated, with 0 and q^l excluded. Complete because
/// reduction only shrinks denominators.
KorseltSet ks_q_bounded(const PrimePower& pp, const Int& max_den);

/// Witnesses for the bases in the open interval ]0,1[: for each divisor d of
/// q^l - q, denominators run over { floor(d/q)+1, ..., ceil(d/(q-1))-1 }.
std::vector<IntervalBaseWitness> ks_interval_pos(const PrimePower& pp);

/// Witnesses for the bases in [-1,0[: denominators run over
/// { ceil(d/(q+1)), ..., ceil(d/q)-1 }. The endpoint -1 is reachable.
std::vector<IntervalBaseWitness> ks_interval_neg(const PrimePower& pp);

/// The Korselt set of q^l restricted to [-1,1[ minus {0}: the union of the
/// two witness families above. Empty exactly when l = 2.
KorseltSet ks_interval(const PrimePower& pp);

/// First witness in divisor order, if any; decides emptiness without
/// enumerating the (possibly large) full witness list.
std::optional<IntervalBaseWitness> first_interval_witness(const PrimePower& pp);

bool ks_interval_empty(const PrimePower& pp);

enum class BoundBranch {
    coprime,   // gcd(numerator, q) = 1; bounds on alpha itself
    divisible, // q | numerator; bounds on alpha' = alpha/q
};

/// Inclusive bounds every base respects. coprime: [1+q-q^(l-1), q^(l-1)+q-1]
/// on alpha. divisible: [2-q^(l-1), (q^(l-1)+1)/2] on alpha/q.
std::pair<Rational, Rational> base_bounds(const PrimePower& pp, BoundBranch branch);

/// m with KS(q^l) intersect KS(q^k) = KS(q^m) for every prime q:
/// m = gcd(l-1, k-1) + 1.
unsigned long intersection_exponent(unsigned long l, unsigned long k);

/// Lifts an integer base candidate beta to alpha = q + (beta-q)/s for
/// s >= 2 coprime to beta - q. Membership of beta and alpha is equivalent,
/// except at beta = 0 and beta = q^l: both are excluded from the integer
/// set by fiat, yet their lifts q - q/s and q + (q^l-q)/s are members.
/// beta = q or gcd(s, beta-q) != 1 are domain_errors.
Rational lift_base(const PrimePower& pp, const Int& beta, const Int& s);

/// For alpha = a1'*q/a2 (q divides the numerator, a1' != 0) returns the
/// mirrored candidate a2*q/a1', reduced. Membership of input and output is
/// equivalent.
Rational mirror_base(const PrimePower& pp, const Rational& alpha);

/// Smallest prime q with alpha not a base of q^2. Exists for every
/// alpha outside {0, 1}; the search stops at the first prime past
/// (|a1*(a1-a2)| + a1)/a2, beyond which membership is impossible.
Int witness_prime(const Rational& alpha);

} // namespace korselt
