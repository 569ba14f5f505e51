#pragma once

#include <array>
#include <cstdint>
#include <utility>

// Exact arithmetic in Z[w], the ring of Eisenstein integers, where
// w = (-1 + sqrt(-3))/2 is a primitive cube root of unity (w^2 = -1 - w).
// Elements are stored as re + om*w with 64-bit integer coordinates.
// The ring is Euclidean for the norm N(re + om*w) = re^2 - re*om + om^2,
// has unit group {+-1, +-w, +-w^2}, and rational primes behave as:
//   p = 3            ramified,  3 = -w^2 (1-w)^2
//   p = 1 mod 3      split,     p = pi * conj(pi) with N(pi) = p
//   p = 2 mod 3      inert,     N(p) = p^2

namespace cubicloc {

struct Eisenstein {
    std::int64_t re{0};  // coefficient of 1
    std::int64_t om{0};  // coefficient of w

    friend constexpr bool operator==(const Eisenstein&, const Eisenstein&) = default;
};

constexpr Eisenstein operator+(Eisenstein a, Eisenstein b) { return {a.re + b.re, a.om + b.om}; }
constexpr Eisenstein operator-(Eisenstein a, Eisenstein b) { return {a.re - b.re, a.om - b.om}; }
constexpr Eisenstein operator-(Eisenstein a) { return {-a.re, -a.om}; }

// (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
constexpr Eisenstein operator*(Eisenstein a, Eisenstein b) {
    return {a.re * b.re - a.om * b.om, a.re * b.om + a.om * b.re - a.om * b.om};
}

constexpr std::int64_t norm(Eisenstein z) { return z.re * z.re - z.re * z.om + z.om * z.om; }

// complex conjugate; conj(w) = w^2 = -1 - w
constexpr Eisenstein conj(Eisenstein z) { return {z.re - z.om, -z.om}; }

constexpr bool is_zero(Eisenstein z) { return z.re == 0 && z.om == 0; }
constexpr bool is_unit(Eisenstein z) { return norm(z) == 1; }

// the six units 1, -1, w, -w, w^2, -w^2
const std::array<Eisenstein, 6>& units();

// Euclidean division: z = q*w + r with norm(r) < norm(w).
// Throws std::invalid_argument on w == 0.
std::pair<Eisenstein, Eisenstein> divmod(Eisenstein z, Eisenstein w);
Eisenstein mod(Eisenstein z, Eisenstein w);

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_rational_prime(std::int64_t n);

// true iff z is a prime element of Z[w]
bool is_prime_element(Eisenstein z);

enum class SplitKind { Split, Inert, Ramified };

struct PrimeSplitting {
    SplitKind kind{};
    Eisenstein pi{};      // Split: prime of norm p (canonical, see pi_above);
                          // Inert: p itself; Ramified: 1 - w
    Eisenstein pi_bar{};  // conjugate of pi
};

// Splitting behaviour of a rational prime. Throws std::invalid_argument
// if p is not prime.
PrimeSplitting split_prime(std::int64_t p);

// For p = 1 mod 3 prime, the canonical prime pi over p = pi * conj(pi) with
// im(pi) > 0 (i.e. om > 0). Among the six norm-p elements with om > 0 we pick
// the one with smallest nonnegative re, ties broken by smallest om, so the
// choice is total and reproducible. Throws std::invalid_argument otherwise.
Eisenstein pi_above(std::int64_t p);

// z is primary iff z = -1 mod 3 in Z[w], i.e. re = 2 and om = 0 mod 3.
// Exactly one associate of any z coprime to 3 is primary; this is the
// normalization under which cubic reciprocity takes its symmetric form.
constexpr bool is_primary(Eisenstein z) {
    auto m3 = [](std::int64_t v) { return ((v % 3) + 3) % 3; };
    return m3(z.re) == 2 && m3(z.om) == 0;
}

// Returns (unit, primary) with primary = unit * z primary.
// Throws std::invalid_argument if z is divisible by 1 - w (norm(z) = 0 mod 3).
std::pair<Eisenstein, Eisenstein> primary_associate(Eisenstein z);

}  // namespace cubicloc
