#include "motsteen/modp.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace motsteen {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Prime::Prime(std::int64_t value)
{
    if (value > std::numeric_limits<std::uint16_t>::max() || !is_prime(value))
        throw std::invalid_argument("not a supported prime: " + std::to_string(value));
    value_ = static_cast<std::uint32_t>(value);
}

std::uint32_t reduce_mod(std::int64_t a, std::uint32_t p)
{
    std::int64_t r = a % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0)
        throw std::domain_error("zero has no inverse mod p");
    // Fermat: a^(p-2)
    std::uint32_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
    }
    return result;
}

Fp::Fp(std::int64_t residue, Prime modulus)
    : residue_(reduce_mod(residue, modulus)), modulus_(modulus)
{
}

namespace {
    void check_same(Prime a, Prime b)
    {
        if (a != b)
            throw std::invalid_argument("modulus mismatch");
    }
}  // namespace

Fp Fp::operator+(Fp o) const
{
    check_same(modulus_, o.modulus_);
    return Fp(add_mod(residue_, o.residue_, modulus_), modulus_);
}

Fp Fp::operator-(Fp o) const
{
    check_same(modulus_, o.modulus_);
    return Fp(sub_mod(residue_, o.residue_, modulus_), modulus_);
}

Fp Fp::operator*(Fp o) const
{
    check_same(modulus_, o.modulus_);
    return Fp(mul_mod(residue_, o.residue_, modulus_), modulus_);
}

Fp Fp::operator-() const
{
    return Fp(sub_mod(0, residue_, modulus_), modulus_);
}

Fp Fp::inverse() const
{
    return Fp(inv_mod(residue_, modulus_), modulus_);
}

std::ostream& operator<<(std::ostream& os, Fp x)
{
    return os << x.residue();
}

Fp binom_mod_p(std::int64_t n, std::int64_t k, Prime p)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("binom_mod_p needs nonnegative arguments");
    if (k > n)
        return Fp(0, p);
    const std::uint32_t q = p;
    std::uint32_t result = 1;
    while (k > 0 || n > 0) {
        auto nd = static_cast<std::uint32_t>(n % q);
        auto kd = static_cast<std::uint32_t>(k % q);
        if (kd > nd)
            return Fp(0, p);
        // C(nd, kd) for digits < p: multiplicative formula with inverses
        std::uint32_t num = 1, den = 1;
        for (std::uint32_t t = 0; t < kd; ++t) {
            num = mul_mod(num, nd - t, q);
            den = mul_mod(den, t + 1, q);
        }
        result = mul_mod(result, mul_mod(num, inv_mod(den, q), q), q);
        n /= q;
        k /= q;
    }
    return Fp(result, p);
}

int exponent_n(Prime p, std::int64_t q)
{
    if (q < 1)
        throw std::invalid_argument("exponent_n needs q >= 1");
    const std::int64_t bound = q - 1;
    std::int64_t term = static_cast<std::int64_t>(p) - 1;  // p^0 (p-1)
    int h = -1;
    while (term <= bound) {
        ++h;
        term *= p;
    }
    return h;
}

std::uint64_t raynaud_number(std::int64_t q, std::int64_t excluded_char)
{
    if (q < 1)
        throw std::invalid_argument("raynaud_number needs q >= 1");
    if (excluded_char != 0 && !is_prime(excluded_char))
        throw std::invalid_argument("excluded characteristic must be 0 or prime");
    std::uint64_t result = 1;
    // primes above q have exponent -1 and contribute nothing
    for (std::int64_t ell = 2; ell <= q; ++ell) {
        if (!is_prime(ell) || ell == excluded_char)
            continue;
        int e = 1 + exponent_n(Prime(ell), q);
        for (int t = 0; t < e; ++t) {
            if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(ell))
                throw std::overflow_error("raynaud_number overflows 64 bits");
            result *= static_cast<std::uint64_t>(ell);
        }
    }
    return result;
}

}  // namespace motsteen
