#include "korselt/integers.hpp"

#include <algorithm>

namespace korselt {

namespace {

// Witnesses 2..41 decide primality for everything below this bound.
const Int& miller_rabin_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

constexpr unsigned long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                          41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// n odd, n > a. True means a proves n composite.
bool witness_shows_composite(const Int& n, unsigned long a) {
    Int d = n - 1;
    const mp_bitcnt_t twos = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), twos);

    Int x;
    const Int base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (mp_bitcnt_t i = 1; i < twos; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
        if (x == 1) return true;
    }
    return true;
}

} // namespace

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw domain_error("floor_div: divisor must be positive");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b <= 0) throw domain_error("ceil_div: divisor must be positive");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long p : kSmallPrimes) {
        if (mpz_cmp_ui(n.get_mpz_t(), p) == 0) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < miller_rabin_bound()) {
        for (unsigned long a : kWitnesses) {
            if (witness_shows_composite(n, a)) return false;
        }
        return true;
    }
    // Beyond the deterministic witness range. Certify by trial division or
    // refuse; a probabilistic "prime" is never surfaced.
    Int d(101);
    while (d * d <= n) {
        if (d > kDefaultFactorBound)
            throw budget_error("is_prime: input exceeds the deterministic range "
                               "and the trial-division budget");
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
        d += 2;
    }
    return true;
}

Int next_prime(const Int& n) {
    Int c = n + 1;
    if (c <= 2) return 2;
    if (mpz_even_p(c.get_mpz_t())) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

namespace {

// candidate steps 7, 11, 13, 17, 19, 23, 29, 31, 37, ... (wheel mod 30)
constexpr unsigned long kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

// Continues the wheel on a machine-word cofactor.
void factor_native(unsigned long rest, unsigned long d, std::size_t w,
                   unsigned long trial_bound, FactorList& out) {
    while (rest > 1) {
        if (static_cast<unsigned long long>(d) * d > rest) {
            out.push_back({Int(rest), 1});
            return;
        }
        if (d > trial_bound) {
            if (is_prime(Int(rest))) {
                out.push_back({Int(rest), 1});
                return;
            }
            throw budget_error("factorize: composite cofactor has no divisor "
                               "within the trial bound");
        }
        if (rest % d == 0) {
            unsigned e = 0;
            do {
                rest /= d;
                ++e;
            } while (rest % d == 0);
            out.push_back({Int(d), e});
        }
        d += kWheel[w];
        w = (w + 1) & 7;
    }
}

} // namespace

FactorList factorize(const Int& n, unsigned long trial_bound) {
    if (n < 2) throw domain_error("factorize: n must be >= 2");

    FactorList out;
    Int rest = n;
    auto pull = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return;
        unsigned e = 0;
        do {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
        out.push_back({Int(p), e});
    };

    pull(2);
    pull(3);
    pull(5);

    Int root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    unsigned long d = 7;
    std::size_t w = 0;
    while (rest > 1) {
        if (rest.fits_ulong_p()) {
            factor_native(rest.get_ui(), d, w, trial_bound, out);
            return out;
        }
        if (mpz_cmp_ui(root.get_mpz_t(), d) < 0) break; // cofactor is prime
        if (d > trial_bound) {
            if (is_prime(rest)) {
                out.push_back({rest, 1});
                return out;
            }
            throw budget_error("factorize: composite cofactor has no divisor "
                               "within the trial bound");
        }
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            pull(d);
            mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
        }
        d += kWheel[w];
        w = (w + 1) & 7;
    }
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

std::vector<Int> divisors(const Int& n, unsigned long trial_bound) {
    if (n < 1) throw domain_error("divisors: n must be >= 1");
    std::vector<Int> divs{Int(1)};
    if (n > 1) {
        for (const Factor& f : factorize(n, trial_bound)) {
            const std::size_t base_count = divs.size();
            Int pk(1);
            for (unsigned e = 1; e <= f.exponent; ++e) {
                pk *= f.prime;
                for (std::size_t i = 0; i < base_count; ++i) divs.push_back(divs[i] * pk);
            }
        }
        std::sort(divs.begin(), divs.end());
    }
    return divs;
}

Int sigma0(const Int& n, unsigned long trial_bound) {
    if (n < 1) throw domain_error("sigma0: n must be >= 1");
    Int count(1);
    if (n > 1) {
        for (const Factor& f : factorize(n, trial_bound)) count *= f.exponent + 1;
    }
    return count;
}

Int euler_phi(const Int& n, unsigned long trial_bound) {
    if (n < 1) throw domain_error("euler_phi: n must be >= 1");
    Int phi(1);
    if (n > 1) {
        for (const Factor& f : factorize(n, trial_bound)) {
            phi *= f.prime - 1;
            for (unsigned e = 1; e < f.exponent; ++e) phi *= f.prime;
        }
    }
    return phi;
}

} // namespace korselt
