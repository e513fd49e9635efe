#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "korselt/integers.hpp"

using namespace korselt;
using kt::I;

TEST_CASE("gcd handles zeros and signs") {
    CHECK(gcd(I(0), I(0)) == 0);
    CHECK(gcd(I(42), I(30)) == 6);
    CHECK(gcd(I(-6), I(4)) == 2);
    CHECK(gcd(I(0), I(-5)) == 5);
}

TEST_CASE("floor and ceil division") {
    CHECK(floor_div(I(3), I(2)) == 1);
    CHECK(ceil_div(I(3), I(2)) == 2);
    CHECK(floor_div(I(6), I(3)) == 2);
    CHECK(ceil_div(I(6), I(3)) == 2);
    CHECK(floor_div(I(-1), I(2)) == -1);
    CHECK(ceil_div(I(-1), I(2)) == 0);
    CHECK_THROWS_AS(floor_div(I(1), I(0)), domain_error);
    CHECK_THROWS_AS(ceil_div(I(1), I(-2)), domain_error);
}

TEST_CASE("floor and ceil division properties") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 2000; ++i) {
        const long a = static_cast<long>(rng() % 20001) - 10000;
        const long b = 1 + static_cast<long>(rng() % 999);
        const Int fd = floor_div(I(a), I(b));
        CHECK(I(b) * fd <= a);
        CHECK(a < I(b) * (fd + 1));
        CHECK(ceil_div(I(a), I(b)) == -floor_div(I(-a), I(b)));
    }
}

TEST_CASE("divisors are complete and ascending") {
    CHECK(divisors(I(42)) == std::vector<Int>{I(1), I(2), I(3), I(6), I(7), I(14), I(21), I(42)});
    CHECK(divisors(I(1)) == std::vector<Int>{I(1)});
    CHECK(divisors(I(8)) == std::vector<Int>{I(1), I(2), I(4), I(8)});
    CHECK_THROWS_AS(divisors(I(0)), domain_error);
}

TEST_CASE("sigma0 examples") {
    CHECK(sigma0(I(6)) == 4);
    CHECK(sigma0(I(1)) == 1);
    CHECK(sigma0(I(63)) == 6);
    CHECK_THROWS_AS(sigma0(I(-3)), domain_error);
}

TEST_CASE("euler_phi examples") {
    CHECK(euler_phi(I(1)) == 1);
    CHECK(euler_phi(I(7)) == 6);
    CHECK(euler_phi(I(12)) == 4);
    CHECK_THROWS_AS(euler_phi(I(0)), domain_error);
}

TEST_CASE("is_prime basics") {
    CHECK(is_prime(I(2)));
    CHECK_FALSE(is_prime(I(1)));
    CHECK_FALSE(is_prime(I(561))); // 3 * 11 * 17
    CHECK(is_prime(I(97)));
    CHECK(is_prime(I(101)));
    CHECK_FALSE(is_prime(I(0)));
    CHECK_FALSE(is_prime(I(-7)));
    // strong pseudoprimes to small bases
    CHECK_FALSE(is_prime(I(2047)));
    CHECK_FALSE(is_prime(Int("3215031751")));
    CHECK(is_prime(Int("18446744073709551557"))); // largest 64-bit prime
}

TEST_CASE("next_prime walks upward") {
    CHECK(next_prime(I(0)) == 2);
    CHECK(next_prime(I(2)) == 3);
    CHECK(next_prime(I(30)) == 31);
    CHECK(next_prime(I(31)) == 37);
}

TEST_CASE("factorize examples and roundtrip") {
    const FactorList f561 = factorize(I(561));
    REQUIRE(f561.size() == 3);
    CHECK(f561[0].prime == 3);
    CHECK(f561[1].prime == 11);
    CHECK(f561[2].prime == 17);
    for (const Factor& f : f561) CHECK(f.exponent == 1);

    const FactorList f8 = factorize(I(8));
    REQUIRE(f8.size() == 1);
    CHECK(f8[0].prime == 2);
    CHECK(f8[0].exponent == 3);

    CHECK(factorize(I(42)).size() == 3);
    CHECK_THROWS_AS(factorize(I(1)), domain_error);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const Int n = I(2 + static_cast<long>(rng() % 5000000));
        Int product(1);
        Int previous(1);
        for (const Factor& f : factorize(n)) {
            CHECK(f.prime > previous); // strictly ascending
            previous = f.prime;
            CHECK(is_prime(f.prime));
            product *= pow_int(f.prime, f.exponent);
        }
        CHECK(product == n);
    }
}

TEST_CASE("factorize refuses to guess past the trial bound") {
    // product of two primes near 1e9; bound 1000 cannot split it
    const Int n = Int("1000000007") * Int("1000000009");
    CHECK_THROWS_AS(factorize(n, 1000), budget_error);
    // a large PRIME cofactor is fine: certified by primality, not division
    const Int m = Int(6) * Int("1000000007");
    CHECK(factorize(m, 1000).size() == 3);
}

TEST_CASE("sigma0 agrees with a divisor-count sieve up to 1e6") {
    constexpr std::uint32_t kLimit = 1000000;
    std::vector<std::uint16_t> counts(kLimit + 1, 0);
    for (std::uint32_t d = 1; d <= kLimit; ++d)
        for (std::uint32_t m = d; m <= kLimit; m += d) ++counts[m];
    for (std::uint32_t n = 1; n <= kLimit; ++n) {
        if (sigma0(I(n)) != counts[n]) {
            REQUIRE_MESSAGE(false, "sigma0 mismatch at n=" << n);
        }
    }
    for (std::uint32_t n = 1; n <= 20000; ++n) {
        if (divisors(I(n)).size() != counts[n]) {
            REQUIRE_MESSAGE(false, "divisor list length mismatch at n=" << n);
        }
    }
    CHECK(divisors(I(720720)).size() == sigma0(I(720720)));
}

TEST_CASE("euler_phi agrees with a totient sieve up to 1e6") {
    constexpr std::uint32_t kLimit = 1000000;
    std::vector<std::uint32_t> phi(kLimit + 1);
    for (std::uint32_t i = 0; i <= kLimit; ++i) phi[i] = i;
    for (std::uint32_t p = 2; p <= kLimit; ++p) {
        if (phi[p] != p) continue; // not prime
        for (std::uint32_t m = p; m <= kLimit; m += p) phi[m] -= phi[m] / p;
    }
    for (std::uint32_t n = 1; n <= kLimit; ++n) {
        if (euler_phi(I(n)) != phi[n]) {
            REQUIRE_MESSAGE(false, "euler_phi mismatch at n=" << n);
        }
    }
}

TEST_CASE("euler_phi equals the direct coprime count up to 1e4") {
    for (std::uint32_t n = 1; n <= 10000; ++n) {
        std::uint32_t count = 0;
        for (std::uint32_t k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        if (euler_phi(I(n)) != count) {
            REQUIRE_MESSAGE(false, "coprime count mismatch at n=" << n);
        }
    }
}
