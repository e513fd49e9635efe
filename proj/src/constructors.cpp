#include "korselt/constructors.hpp"

#include <algorithm>
#include <stdexcept>

namespace korselt {

namespace {

bool divides(const Int& d, const Int& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

unsigned long exponent_within_budget(const Int& phi, unsigned long max_exponent,
                                     const char* who) {
    if (!phi.fits_ulong_p() || phi.get_ui() + 1 > max_exponent)
        throw budget_error(std::string(who) + ": exponent exceeds the configured budget");
    return phi.get_ui() + 1;
}

Construction verified(Rational base, PrimePower pp, Route route) {
    if (!is_prime_power_base(pp, base))
        throw std::logic_error("construction failed verification");
    return {std::move(base), std::move(pp), route};
}

} // namespace

std::vector<Int> eligible_generators(unsigned long l, const Int& bound) {
    if (l < 2) throw domain_error("eligible_generators: l must be >= 2");
    if (bound < 1) throw domain_error("eligible_generators: bound must be >= 1");
    const Int target(l - 1);
    std::vector<Int> out;
    for (Int d(1); d <= bound; ++d) {
        if (divides(euler_phi(d), target)) out.push_back(d);
    }
    return out;
}

GeneratedBase bases_from_divisor(const PrimePower& pp, const Int& d, const Int& m) {
    if (d < 1) throw domain_error("bases_from_divisor: d must be positive");
    if (!divides(euler_phi(d), Int(pp.l - 1)))
        throw domain_error("bases_from_divisor: phi(d) must divide l - 1");

    const Int t = d / pp.q;
    const Int r = d % pp.q;

    GeneratorCase tag;
    Int num;
    Int den;
    if (t == 0) {
        tag = GeneratorCase::below_q;
        if (m < 1) throw skip_parameter("below-q case needs m >= 1");
        num = m * pp.q - r; // r = d here
        den = m;
    } else if (r == 0) {
        tag = GeneratorCase::multiple_of_q;
        if (m < 1) throw skip_parameter("multiple-of-q case needs m >= 1");
        num = m * pp.q;
        den = t + m;
    } else {
        tag = GeneratorCase::mixed;
        if (t + m == 0) throw skip_parameter("mixed case needs t_d + m nonzero");
        num = m * pp.q - r;
        den = t + m;
    }

    Rational value(std::move(num), std::move(den));
    if (value.is_zero() || (value.is_integer() && value.num() == pp.value))
        throw skip_parameter("parameter lands on an excluded value");
    // Only the multiple-of-q case can fail here: its divisibility needs
    // t_d | (t_d + m)(q^(l-1) - 1), which not every m satisfies.
    if (!is_prime_power_base(pp, value))
        throw skip_parameter("parameter does not produce a base");
    return {d, tag, m, std::move(value)};
}

GeneratedBase first_base_from_divisor(const PrimePower& pp, const Int& d, long m_limit) {
    const auto attempt = [&](long m) -> std::optional<GeneratedBase> {
        try {
            return bases_from_divisor(pp, d, Int(m));
        } catch (const skip_parameter&) {
            return std::nullopt;
        }
    };
    for (long m = 1; m <= m_limit; ++m) {
        if (auto base = attempt(m)) return *std::move(base);
    }
    for (long m = 0; m >= -m_limit; --m) {
        if (auto base = attempt(m)) return *std::move(base);
    }
    throw domain_error("first_base_from_divisor: no valid parameter within the scan limit");
}

Construction prime_power_for_base_coprime(const Rational& alpha, unsigned long max_exponent) {
    if (alpha.is_zero()) throw domain_error("prime_power_for_base_coprime: alpha must be nonzero");
    const Int p = next_prime(::abs(alpha.num()));
    const Int k1 = alpha.den() * p - alpha.num();
    const unsigned long k =
        exponent_within_budget(euler_phi(k1), max_exponent, "prime_power_for_base_coprime");
    return verified(alpha, PrimePower(p, k), Route::coprime);
}

DividingSearch prime_power_for_base_dividing(const Rational& alpha, unsigned long max_exponent) {
    if (alpha.is_zero())
        throw domain_error("prime_power_for_base_dividing: alpha must be nonzero");
    if (::abs(alpha.num()) == 1)
        throw domain_error("prime_power_for_base_dividing: |numerator| must exceed 1");

    DividingSearch search;
    for (const Factor& f : factorize(::abs(alpha.num()))) {
        const Int& q = f.prime;
        Int a1p;
        mpz_divexact(a1p.get_mpz_t(), alpha.num().get_mpz_t(), q.get_mpz_t());
        const Int residue = alpha.den() - a1p;
        if (divides(q, residue)) {
            // q | (a2 - a1') forces q | 1 for every exponent; hopeless.
            search.blocked.push_back({q, residue});
            continue;
        }
        unsigned long l = exponent_within_budget(euler_phi(::abs(residue)), max_exponent,
                                                 "prime_power_for_base_dividing");
        PrimePower pp(q, l);
        if (alpha.is_integer() && alpha.num() == pp.value) {
            // N collided with alpha itself; the next exponent in the
            // inclusion chain keeps the divisibility and moves N away.
            pp = PrimePower(q, 2 * l - 1);
        }
        search.construction = verified(alpha, std::move(pp), Route::dividing);
        return search;
    }
    return search;
}

std::vector<Construction> base_family(const Rational& alpha, unsigned long count,
                                      unsigned long max_exponent) {
    if (count < 1) throw domain_error("base_family: count must be >= 1");
    const Construction seed = prime_power_for_base_coprime(alpha, max_exponent);
    const unsigned long l1 = seed.pp.l;
    std::vector<Construction> out;
    out.reserve(count);
    for (unsigned long j = 0; out.size() < count; ++j) {
        const unsigned long l = l1 + j * (l1 - 1);
        if (l > max_exponent) throw budget_error("base_family: exponent exceeds the budget");
        out.push_back(verified(alpha, PrimePower(seed.pp.q, l), Route::coprime));
    }
    return out;
}

std::vector<Rational> unit_fraction_bases(const PrimePower& pp) {
    std::vector<Rational> out;
    const Int lm1(pp.l - 1);
    for (const Int& s : divisors(lm1)) {
        const Int den = pow_int(pp.q, s.get_ui() - 1);
        out.emplace_back(Int(1), den);
        if (mpz_even_p(Int(lm1 / s).get_mpz_t())) out.emplace_back(Int(-1), den);
    }
    for (const Rational& v : out) {
        if (!is_prime_power_base(pp, v))
            throw std::logic_error("unit fraction failed verification");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<bool, bool> reciprocal_pair_holds(const Int& p, const Int& q, unsigned long l,
                                            int sign) {
    if (p == q) throw domain_error("reciprocal_pair_holds: p and q must be distinct");
    if (sign != 1 && sign != -1) throw domain_error("reciprocal_pair_holds: sign must be +1 or -1");
    const bool over_p = is_prime_power_base(PrimePower(q, l), Rational(Int(sign), p));
    const bool over_q = is_prime_power_base(PrimePower(p, l), Rational(Int(sign), q));
    return {over_p, over_q};
}

std::vector<Int> feasible_primes(const Rational& alpha, unsigned long l) {
    if (alpha.is_zero() || alpha == Rational(Int(1)))
        throw domain_error("feasible_primes: alpha must avoid 0 and 1");
    if (l < 2) throw domain_error("feasible_primes: l must be >= 2");

    const Rational bound =
        alpha + (alpha * Rational(pow_int(alpha.num(), l - 2)) -
                 Rational(pow_int(alpha.den(), l - 2)))
                    .abs();
    std::vector<Int> out;
    for (Int q(2); Rational(q) <= bound; q = next_prime(q)) {
        if (gcd(alpha.num(), q) != 1) continue;
        if (is_prime_power_base(PrimePower(q, l), alpha)) out.push_back(q);
    }
    return out;
}

} // namespace korselt
