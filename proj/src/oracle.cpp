#include "korselt/oracle.hpp"

namespace korselt::oracle {

namespace {

// Own trial-division factor walk; the oracle shares no helper with the
// closed forms beyond raw integer arithmetic.
std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    Int rest = n;
    Int p(2);
    while (p * p <= rest) {
        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            out.push_back(p);
            do {
                mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
            } while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()));
        }
        p += (p == 2) ? 1 : 2;
    }
    if (rest > 1) out.push_back(rest);
    return out;
}

bool literal_check(const std::vector<Int>& primes, const Int& n, const Int& num,
                   const Int& den) {
    const Int x = den * n - num;
    for (const Int& p : primes) {
        const Int d = den * p - num;
        if (d == 0) {
            if (x != 0) return false;
        } else if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
            return false;
        }
    }
    return true;
}

} // namespace

bool brute_is_korselt(const Int& n, const Rational& alpha) {
    if (n < 2) throw domain_error("brute_is_korselt: N must be >= 2");
    if (alpha.is_zero()) throw domain_error("brute_is_korselt: alpha = 0 is excluded");
    if (alpha.is_integer() && alpha.num() == n)
        throw domain_error("brute_is_korselt: alpha = N is excluded");
    return literal_check(prime_divisors(n), n, alpha.num(), alpha.den());
}

KorseltSet brute_ks_box(const Int& n, const ScanBox& box) {
    if (n < 2) throw domain_error("brute_ks_box: N must be >= 2");
    if (box.max_num_abs < 0) throw domain_error("brute_ks_box: negative numerator bound");
    if (box.max_den < 1) throw domain_error("brute_ks_box: denominator bound must be >= 1");

    const std::vector<Int> primes = prime_divisors(n);
    std::vector<Rational> hits;
    for (Int b(1); b <= box.max_den; ++b) {
        for (Int a = -box.max_num_abs; a <= box.max_num_abs; ++a) {
            if (a == 0) continue;
            if (gcd(a, b) != 1) continue; // each value tested once, in lowest terms
            if (b == 1 && a == n) continue;
            if (literal_check(primes, n, a, b)) hits.emplace_back(a, b);
        }
    }
    return KorseltSet::of(std::move(hits), n);
}

KorseltSet brute_ks_z(const Int& n, const Int& radius) {
    if (n < 2) throw domain_error("brute_ks_z: N must be >= 2");
    if (radius < 1) throw domain_error("brute_ks_z: radius must be >= 1");

    const std::vector<Int> primes = prime_divisors(n);
    std::vector<Rational> hits;
    for (Int a = -radius; a <= radius; ++a) {
        if (a == 0 || a == n) continue;
        if (literal_check(primes, n, a, Int(1))) hits.emplace_back(a);
    }
    return KorseltSet::of(std::move(hits), n);
}

} // namespace korselt::oracle
