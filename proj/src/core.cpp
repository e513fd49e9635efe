#include "korselt/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace korselt {

namespace {

// Division convention used throughout: zero divides only zero. It makes the
// predicate total; in particular alpha = q is never a member.
bool divides(const Int& d, const Int& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool equals_int(const Rational& alpha, const Int& n) {
    return alpha.is_integer() && alpha.num() == n;
}

void require_in_domain(const Rational& alpha, const Int& n, const char* who) {
    if (alpha.is_zero()) throw domain_error(std::string(who) + ": alpha = 0 is excluded");
    if (equals_int(alpha, n)) throw domain_error(std::string(who) + ": alpha = N is excluded");
}

} // namespace

PrimePower::PrimePower(Int q_, unsigned long l_) : q(std::move(q_)), l(l_) {
    if (l < 2) throw domain_error("prime power: exponent must be at least 2");
    if (!is_prime(q)) throw domain_error("prime power: q must be prime");
    value = pow_int(q, l);
}

KorseltSet KorseltSet::of(std::vector<Rational> candidates, const Int& n) {
    std::erase_if(candidates,
                  [&](const Rational& r) { return r.is_zero() || equals_int(r, n); });
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    KorseltSet set;
    set.members_ = std::move(candidates);
    return set;
}

bool KorseltSet::contains(const Rational& value) const {
    return std::binary_search(members_.begin(), members_.end(), value);
}

bool is_korselt(const Int& n, const Rational& alpha, unsigned long factor_bound) {
    if (n < 2) throw domain_error("is_korselt: N must be >= 2");
    require_in_domain(alpha, n, "is_korselt");
    const Int x = alpha.den() * n - alpha.num();
    for (const Factor& f : factorize(n, factor_bound)) {
        if (!divides(alpha.den() * f.prime - alpha.num(), x)) return false;
    }
    return true;
}

bool is_prime_power_base(const PrimePower& pp, const Rational& alpha) {
    require_in_domain(alpha, pp.value, "is_prime_power_base");
    return divides(alpha.den() * pp.q - alpha.num(), pp.value - pp.q);
}

bool ks_member(const PrimePower& pp, const Rational& alpha) {
    if (alpha.is_zero() || equals_int(alpha, pp.value)) return false;
    return is_prime_power_base(pp, alpha);
}

KorseltSet ks_z(const PrimePower& pp) {
    std::vector<Rational> candidates;
    for (const Int& d : divisors(pp.value - pp.q)) {
        candidates.emplace_back(pp.q + d);
        candidates.emplace_back(pp.q - d);
    }
    return KorseltSet::of(std::move(candidates), pp.value);
}

Int kw_z(const PrimePower& pp) { return 4 * sigma0(pow_int(pp.q, pp.l - 1) - 1) - 2; }

KorseltSet ks_q_bounded(const PrimePower& pp, const Int& max_den) {
    if (max_den < 1) throw domain_error("ks_q_bounded: max_den must be >= 1");
    const std::vector<Int> divs = divisors(pp.value - pp.q);
    std::vector<Rational> candidates;
    for (Int s(1); s <= max_den; ++s) {
        for (const Int& d : divs) {
            candidates.push_back(BaseForm{pp.q, d, s}.value());
            candidates.push_back(BaseForm{pp.q, d, -s}.value());
        }
    }
    return KorseltSet::of(std::move(candidates), pp.value);
}

namespace {

struct DenRange {
    Int lo;
    Int hi;
};

// Denominators putting q - d/den strictly inside ]0,1[.
DenRange positive_range(const PrimePower& pp, const Int& d) {
    return {floor_div(d, pp.q) + 1, ceil_div(d, pp.q - 1) - 1};
}

// Denominators putting q - d/den inside [-1,0[.
DenRange negative_range(const PrimePower& pp, const Int& d) {
    return {ceil_div(d, pp.q + 1), ceil_div(d, pp.q) - 1};
}

template <typename RangeFn>
std::vector<IntervalBaseWitness> interval_witnesses(const PrimePower& pp, RangeFn range_of) {
    std::vector<IntervalBaseWitness> out;
    for (const Int& d : divisors(pp.value - pp.q)) {
        const DenRange range = range_of(pp, d);
        for (Int den = range.lo; den <= range.hi; ++den) {
            out.push_back({d, den, Rational(pp.q * den - d, den)});
        }
    }
    return out;
}

} // namespace

std::vector<IntervalBaseWitness> ks_interval_pos(const PrimePower& pp) {
    return interval_witnesses(pp, positive_range);
}

std::vector<IntervalBaseWitness> ks_interval_neg(const PrimePower& pp) {
    return interval_witnesses(pp, negative_range);
}

KorseltSet ks_interval(const PrimePower& pp) {
    std::vector<Rational> values;
    for (const IntervalBaseWitness& w : ks_interval_pos(pp)) values.push_back(w.value);
    for (const IntervalBaseWitness& w : ks_interval_neg(pp)) values.push_back(w.value);
    return KorseltSet::of(std::move(values), pp.value);
}

std::optional<IntervalBaseWitness> first_interval_witness(const PrimePower& pp) {
    for (const Int& d : divisors(pp.value - pp.q)) {
        for (const DenRange& range : {positive_range(pp, d), negative_range(pp, d)}) {
            if (range.lo <= range.hi) {
                return IntervalBaseWitness{d, range.lo, Rational(pp.q * range.lo - d, range.lo)};
            }
        }
    }
    return std::nullopt;
}

bool ks_interval_empty(const PrimePower& pp) { return !first_interval_witness(pp).has_value(); }

std::pair<Rational, Rational> base_bounds(const PrimePower& pp, BoundBranch branch) {
    const Int p = pow_int(pp.q, pp.l - 1);
    if (branch == BoundBranch::coprime) {
        return {Rational(1 + pp.q - p), Rational(p + pp.q - 1)};
    }
    return {Rational(2 - p), Rational(p + 1, Int(2))};
}

unsigned long intersection_exponent(unsigned long l, unsigned long k) {
    if (l < 2 || k < 2) throw domain_error("intersection_exponent: exponents must be >= 2");
    return std::gcd(l - 1, k - 1) + 1;
}

Rational lift_base(const PrimePower& pp, const Int& beta, const Int& s) {
    if (s < 2) throw domain_error("lift_base: s must be >= 2");
    if (beta == pp.q) throw domain_error("lift_base: beta = q lifts to the integer q");
    if (gcd(s, beta - pp.q) != 1)
        throw domain_error("lift_base: s must be coprime to beta - q");
    return {pp.q * s + beta - pp.q, s};
}

Rational mirror_base(const PrimePower& pp, const Rational& alpha) {
    if (!mpz_divisible_p(alpha.num().get_mpz_t(), pp.q.get_mpz_t()))
        throw domain_error("mirror_base: numerator must be divisible by q");
    if (alpha.is_zero()) throw domain_error("mirror_base: alpha must be nonzero");
    Int a1p;
    mpz_divexact(a1p.get_mpz_t(), alpha.num().get_mpz_t(), pp.q.get_mpz_t());
    return {alpha.den() * pp.q, std::move(a1p)};
}

Int witness_prime(const Rational& alpha) {
    if (alpha.is_zero() || alpha == Rational(Int(1)))
        throw domain_error("witness_prime: alpha must avoid 0 and 1");
    // Membership for exponent 2 means (a2*q - a1) | a1*(a1 - a2), so any
    // prime past (|a1*(a1 - a2)| + a1)/a2 fails; the search is finite.
    const Int numerator_bound = ::abs(alpha.num() * (alpha.num() - alpha.den())) + alpha.num();
    Int cap = floor_div(numerator_bound, alpha.den());
    if (cap < 1) cap = 1;
    const Int stop = next_prime(cap);
    for (Int q(2); q <= stop; q = next_prime(q)) {
        if (!ks_member(PrimePower(q, 2), alpha)) return q;
    }
    throw std::logic_error("witness_prime: bounded search exhausted"); // unreachable
}

} // namespace korselt
