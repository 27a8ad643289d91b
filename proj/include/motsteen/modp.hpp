#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>

namespace motsteen {

bool is_prime(std::int64_t n);

/// A rational prime, checked by trial division at construction.
class Prime
{
public:
    explicit Prime(std::int64_t value);

    std::uint32_t value() const { return value_; }
    operator std::uint32_t() const { return value_; }

    friend bool operator==(Prime, Prime) = default;

private:
    std::uint32_t value_;
};

/// An element of the prime field F_p, always fully reduced.
class Fp
{
public:
    Fp(std::int64_t residue, Prime modulus);

    std::uint32_t residue() const { return residue_; }
    Prime modulus() const { return modulus_; }
    bool is_zero() const { return residue_ == 0; }

    Fp operator+(Fp o) const;
    Fp operator-(Fp o) const;
    Fp operator*(Fp o) const;
    Fp operator-() const;
    Fp inverse() const;

    friend bool operator==(Fp, Fp) = default;

private:
    std::uint32_t residue_;
    Prime modulus_;
};

std::ostream& operator<<(std::ostream& os, Fp x);

// Raw residue helpers used by the hot loops; inputs must already be < p.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce_mod(std::int64_t a, std::uint32_t p);

/// C(n, k) mod p via Lucas' theorem (base-p digit products). Zero when k > n.
Fp binom_mod_p(std::int64_t n, std::int64_t k, Prime p);

/// Largest h >= 0 with p^h (p-1) <= q-1, or -1 when no such h exists.
int exponent_n(Prime p, std::int64_t q);

/// N_q: product over primes p != excluded_char of p^(1 + exponent_n(p, q)).
/// excluded_char == 0 excludes nothing. Throws std::invalid_argument when
/// excluded_char is neither 0 nor prime, std::overflow_error on overflow.
std::uint64_t raynaud_number(std::int64_t q, std::int64_t excluded_char);

}  // namespace motsteen
