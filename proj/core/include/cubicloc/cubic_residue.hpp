#pragma once

#include <cstdint>
#include <vector>

#include "cubicloc/eisenstein.hpp"

// The 3rd power residue symbol (alpha/pi)_3 on Z[w] and the rational cubic
// characters chi_p built from it. For a prime pi with norm(pi) != 3 the
// symbol is the unique value v in {1, w, w^2} with
//     alpha^((N(pi)-1)/3) = v  (mod pi),
// or 0 when pi | alpha. chi_p restricts the symbol at the canonical prime
// pi_p over p (see pi_above) to rational arguments; chi_p(n) = 1 exactly
// when n is a nonzero cube mod p. chi_d extends multiplicatively over
// square-free d whose prime factors are all = 1 mod 3.

namespace cubicloc {

enum class CubicValue : std::uint8_t { Zero, One, Omega, OmegaSq };

constexpr CubicValue cubic_from_exponent(int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return CubicValue::One;
        case 1: return CubicValue::Omega;
        default: return CubicValue::OmegaSq;
    }
}

constexpr CubicValue operator*(CubicValue a, CubicValue b) {
    if (a == CubicValue::Zero || b == CubicValue::Zero) return CubicValue::Zero;
    auto e = [](CubicValue v) { return v == CubicValue::One ? 0 : v == CubicValue::Omega ? 1 : 2; };
    return cubic_from_exponent(e(a) + e(b));
}

constexpr CubicValue conj(CubicValue v) {
    if (v == CubicValue::Omega) return CubicValue::OmegaSq;
    if (v == CubicValue::OmegaSq) return CubicValue::Omega;
    return v;
}

constexpr Eisenstein to_eisenstein(CubicValue v) {
    switch (v) {
        case CubicValue::Zero: return {0, 0};
        case CubicValue::One: return {1, 0};
        case CubicValue::Omega: return {0, 1};
        default: return {-1, -1};  // w^2
    }
}

// (alpha/pi)_3. Throws std::invalid_argument if pi is not prime or is an
// associate of 1 - w.
CubicValue power_residue_symbol(Eisenstein alpha, Eisenstein pi);

// chi_p(n) = (n/pi_p)_3 for p = 1 mod 3 prime; Zero iff p | n, One iff n is
// a nonzero cube mod p.
CubicValue chi(std::int64_t p, std::int64_t n);

// Modulus d of the multiplicatively extended character chi_d: d positive,
// square-free, every prime factor = 1 mod 3. d = 1 carries the trivial
// character. Construction validates the shape and throws std::invalid_argument.
struct CharacterModulus {
    std::int64_t d{1};
    std::vector<std::int64_t> primes;  // ascending
    Eisenstein pi_d{1, 0};             // product of pi_above(p) over p | d

    static CharacterModulus make(std::int64_t d);
};

// product over p | d of chi(p, n); One for d = 1
CubicValue chi_composite(const CharacterModulus& d, std::int64_t n);

// (1 + chi_d(n) + chi_d(n)^2)/3 evaluated exactly: 1 when chi_d(n) = One,
// else 0. Requires gcd(n, d) = 1 (throws std::invalid_argument otherwise).
int cube_indicator(const CharacterModulus& d, std::int64_t n);

}  // namespace cubicloc
