#include "cubicloc/cubic_residue.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cubicloc {

namespace {

Eisenstein mulmod(Eisenstein a, Eisenstein b, Eisenstein pi) { return mod(a * b, pi); }

Eisenstein powmod(Eisenstein base, std::int64_t e, Eisenstein pi) {
    Eisenstein r{1, 0};
    base = mod(base, pi);
    while (e) {
        if (e & 1) r = mulmod(r, base, pi);
        base = mulmod(base, base, pi);
        e >>= 1;
    }
    return r;
}

// pi_above is a bounded search; experiments evaluate chi at the same handful
// of primes over and over, so keep the canonical primes in a shared table
std::mutex g_pi_mutex;
std::unordered_map<std::int64_t, Eisenstein> g_pi_cache;

Eisenstein cached_pi_above(std::int64_t p) {
    std::lock_guard<std::mutex> lock(g_pi_mutex);
    auto it = g_pi_cache.find(p);
    if (it != g_pi_cache.end()) return it->second;
    Eisenstein pi = pi_above(p);
    g_pi_cache.emplace(p, pi);
    return pi;
}

}  // namespace

CubicValue power_residue_symbol(Eisenstein alpha, Eisenstein pi) {
    if (!is_prime_element(pi))
        throw std::invalid_argument("power_residue_symbol: pi is not prime in Z[w]");
    const std::int64_t n = norm(pi);
    if (n == 3)
        throw std::invalid_argument("power_residue_symbol: pi is an associate of 1 - w");
    // N(pi) = 1 mod 3 for every prime away from 1 - w
    const Eisenstein r = powmod(alpha, (n - 1) / 3, pi);
    if (is_zero(r)) return CubicValue::Zero;
    for (CubicValue v : {CubicValue::One, CubicValue::Omega, CubicValue::OmegaSq}) {
        if (is_zero(mod(r - to_eisenstein(v), pi))) return v;
    }
    throw std::logic_error("power_residue_symbol: residue is not a cube root of unity");
}

CubicValue chi(std::int64_t p, std::int64_t n) {
    if (p % 3 != 1 || !is_rational_prime(p))
        throw std::invalid_argument("chi: p must be a prime = 1 mod 3");
    const std::int64_t r = ((n % p) + p) % p;
    return power_residue_symbol(Eisenstein{r, 0}, cached_pi_above(p));
}

CharacterModulus CharacterModulus::make(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("CharacterModulus: d must be positive");
    CharacterModulus cm;
    cm.d = d;
    std::int64_t rest = d;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        rest /= p;
        if (rest % p == 0)
            throw std::invalid_argument("CharacterModulus: d must be square-free");
        if (p % 3 != 1)
            throw std::invalid_argument("CharacterModulus: prime factor " + std::to_string(p) +
                                        " of d is not 1 mod 3");
        cm.primes.push_back(p);
    }
    if (rest > 1) {
        if (rest % 3 != 1)
            throw std::invalid_argument("CharacterModulus: prime factor " + std::to_string(rest) +
                                        " of d is not 1 mod 3");
        cm.primes.push_back(rest);
    }
    for (std::int64_t p : cm.primes) cm.pi_d = cm.pi_d * cached_pi_above(p);
    return cm;
}

CubicValue chi_composite(const CharacterModulus& d, std::int64_t n) {
    CubicValue v = CubicValue::One;
    for (std::int64_t p : d.primes) {
        v = v * chi(p, n);
        if (v == CubicValue::Zero) break;
    }
    return v;
}

int cube_indicator(const CharacterModulus& d, std::int64_t n) {
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d.d);
    if (g != 1)
        throw std::invalid_argument("cube_indicator: gcd(n, d) = " + std::to_string(g) + " > 1");
    return chi_composite(d, n) == CubicValue::One ? 1 : 0;
}

}  // namespace cubicloc
