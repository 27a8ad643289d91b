#include "motsteen/modp.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

using namespace motsteen;
using boost::multiprecision::cpp_int;

TEST_CASE("prime construction")
{
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(7919).value() == 7919);
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Prime(0), std::invalid_argument);
    CHECK_THROWS_AS(Prime(9), std::invalid_argument);
    CHECK_THROWS_AS(Prime(-3), std::invalid_argument);
}

TEST_CASE("Fp arithmetic is closed and reduced")
{
    const Prime p(5);
    Fp a(7, p), b(-1, p);
    CHECK(a.residue() == 2);
    CHECK(b.residue() == 4);
    CHECK((a + b).residue() == 1);
    CHECK((a - b).residue() == 3);
    CHECK((a * b).residue() == 3);
    CHECK((a * a.inverse()).residue() == 1);
    CHECK((-a).residue() == 3);
    CHECK_THROWS_AS(Fp(0, p).inverse(), std::domain_error);
    CHECK_THROWS_AS(Fp(1, Prime(3)) + Fp(1, Prime(5)), std::invalid_argument);
}

TEST_CASE("binom_mod_p examples")
{
    CHECK(binom_mod_p(1, 1, Prime(3)).residue() == 1);
    for (int p : {2, 3, 5, 7})
        for (int n : {0, 1, 17, 500})
            CHECK(binom_mod_p(n, 0, Prime(p)).residue() == 1);
    // C(5,2) = 10 = 1 mod 3; base 3: 5 = (1,2), 2 = (0,2) -> C(1,0) C(2,2) = 1
    CHECK(binom_mod_p(5, 2, Prime(3)).residue() == 1);
    CHECK(binom_mod_p(3, 5, Prime(7)).residue() == 0);
    CHECK_THROWS_AS(binom_mod_p(-1, 0, Prime(2)), std::invalid_argument);
}

TEST_CASE("Lucas agrees with exact big-integer binomials for n <= 2000")
{
    const std::vector<int> primes{2, 3, 5, 7};
    long mismatches = 0;
    for (int n = 0; n <= 2000; ++n) {
        cpp_int c = 1;  // C(n, 0)
        for (int k = 0; k <= n; ++k) {
            for (int p : primes) {
                const auto exact = static_cast<unsigned>(c % p);
                if (binom_mod_p(n, k, Prime(p)).residue() != exact)
                    ++mismatches;
            }
            c = c * (n - k) / (k + 1);
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("big-integer factorial cross-check on a grid")
{
    std::vector<cpp_int> fact(2001);
    fact[0] = 1;
    for (int i = 1; i <= 2000; ++i)
        fact[i] = fact[i - 1] * i;
    for (int n = 0; n <= 2000; n += 37) {
        for (int k = 0; k <= n; k += 13) {
            cpp_int exact = fact[n] / (fact[k] * fact[n - k]);
            for (int p : {2, 3, 5, 7})
                CHECK(binom_mod_p(n, k, Prime(p)).residue() == static_cast<unsigned>(exact % p));
        }
    }
}

TEST_CASE("Pascal identity mod p")
{
    for (int p : {2, 3, 5, 7, 11}) {
        const Prime pr(p);
        for (int n = 0; n <= 300; ++n)
            for (int k = 1; k <= n + 1; ++k)
                REQUIRE(binom_mod_p(n, k, pr) + binom_mod_p(n, k - 1, pr) == binom_mod_p(n + 1, k, pr));
    }
}

TEST_CASE("exponent_n examples and boundary")
{
    CHECK(exponent_n(Prime(2), 2) == 0);
    CHECK(exponent_n(Prime(2), 3) == 1);
    for (int p : {2, 3, 5, 7, 101})
        CHECK(exponent_n(Prime(p), 1) == -1);
    CHECK(exponent_n(Prime(3), 3) == 0);
    CHECK(exponent_n(Prime(3), 7) == 1);   // 3*2 = 6 <= 6
    CHECK(exponent_n(Prime(3), 19) == 2);  // 9*2 = 18 <= 18
    CHECK(exponent_n(Prime(5), 4) == -1);  // 4 > 3
    CHECK_THROWS_AS(exponent_n(Prime(2), 0), std::invalid_argument);
}

TEST_CASE("exponent_n is the largest admissible h")
{
    for (int p : {2, 3, 5, 7}) {
        for (int q = 1; q <= 400; ++q) {
            const int h = exponent_n(Prime(p), q);
            long pow = 1;
            for (int t = 0; t < h; ++t)
                pow *= p;
            if (h >= 0)
                CHECK(pow * (p - 1) <= q - 1);
            CHECK(pow * p * (p - 1) > q - 1);
        }
    }
}

TEST_CASE("exponent_n is nondecreasing in q")
{
    for (int p : {2, 3, 5, 7})
        for (int q = 1; q < 500; ++q)
            CHECK(exponent_n(Prime(p), q) <= exponent_n(Prime(p), q + 1));
}

TEST_CASE("raynaud_number examples")
{
    CHECK(raynaud_number(1, 0) == 1);
    CHECK(raynaud_number(2, 0) == 2);
    CHECK(raynaud_number(3, 2) == 3);
    CHECK(raynaud_number(3, 0) == 12);
    CHECK(raynaud_number(3, 3) == 4);
    CHECK(raynaud_number(5, 7) == raynaud_number(5, 0));  // 7 > q contributes 1 anyway
    CHECK_THROWS_AS(raynaud_number(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(raynaud_number(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(raynaud_number(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(raynaud_number(200, 0), std::overflow_error);
}

TEST_CASE("excluding a prime divides out exactly its factor")
{
    for (int q = 1; q <= 30; ++q) {
        for (int c = 2; c <= q; ++c) {
            if (!is_prime(c))
                continue;
            std::uint64_t factor = 1;
            for (int t = 0; t < 1 + exponent_n(Prime(c), q); ++t)
                factor *= static_cast<std::uint64_t>(c);
            CHECK(raynaud_number(q, c) * factor == raynaud_number(q, 0));
        }
    }
}
