#include "cubicloc/eisenstein.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cubicloc {

namespace {

using i128 = __int128;

// nearest integer to n/d for d > 0; guarantees |n - q*d| <= d/2
std::int64_t round_div(i128 n, i128 d) {
    i128 q = (n >= 0) ? (2 * n + d) / (2 * d) : -((-2 * n + d) / (2 * d));
    return static_cast<std::int64_t>(q);
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

const std::array<Eisenstein, 6>& units() {
    static const std::array<Eisenstein, 6> u = {{
        {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1},
    }};
    return u;
}

std::pair<Eisenstein, Eisenstein> divmod(Eisenstein z, Eisenstein w) {
    if (is_zero(w)) throw std::invalid_argument("divmod: division by zero in Z[w]");
    // z / w = z * conj(w) / N(w); round both coordinates to the nearest
    // integer. The rounding error has norm <= 3/4, so norm(r) < norm(w).
    const Eisenstein t = z * conj(w);
    const i128 n = norm(w);
    Eisenstein q{round_div(t.re, n), round_div(t.om, n)};
    Eisenstein r = z - q * w;
    return {q, r};
}

Eisenstein mod(Eisenstein z, Eisenstein w) { return divmod(z, w).second; }

bool is_rational_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        std::uint64_t x = powmod_u64(a % static_cast<std::uint64_t>(n),
                                     d, static_cast<std::uint64_t>(n));
        if (x == 0 || x == 1 || x == static_cast<std::uint64_t>(n) - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n) - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime_element(Eisenstein z) {
    const std::int64_t n = norm(z);
    if (n <= 1) return false;
    if (is_rational_prime(n)) return true;  // covers split primes and 1 - w
    // inert case: associate of a rational prime q = 2 mod 3, norm q^2
    const std::int64_t q = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t c : {q - 1, q, q + 1}) {
        if (c > 1 && c * c == n && c % 3 == 2 && is_rational_prime(c)) {
            for (const auto& u : units()) {
                if (z == u * Eisenstein{c, 0}) return true;
            }
        }
    }
    return false;
}

PrimeSplitting split_prime(std::int64_t p) {
    if (!is_rational_prime(p)) throw std::invalid_argument("split_prime: input is not prime");
    if (p == 3) {
        Eisenstein pi{1, -1};  // 1 - w, norm 3
        return {SplitKind::Ramified, pi, conj(pi)};
    }
    if (p % 3 == 2) {
        Eisenstein pi{p, 0};
        return {SplitKind::Inert, pi, pi};
    }
    Eisenstein pi = pi_above(p);
    return {SplitKind::Split, pi, conj(pi)};
}

Eisenstein pi_above(std::int64_t p) {
    if (!is_rational_prime(p) || p % 3 != 1)
        throw std::invalid_argument("pi_above: p must be a prime = 1 mod 3");
    // Any norm-p element has |x|, |y| <= sqrt(4p/3). Scan x upward (the
    // canonical pick has re >= 0) and solve y^2 - xy + (x^2 - p) = 0 exactly.
    const std::int64_t bound =
        static_cast<std::int64_t>(std::ceil(std::sqrt(4.0 * static_cast<double>(p) / 3.0))) + 1;
    bool found = false;
    Eisenstein best{};
    auto consider = [&](std::int64_t x, std::int64_t y) {
        if (y < 1 || x * x - x * y + y * y != p) return;
        if (!found || x < best.re || (x == best.re && y < best.om)) {
            best = {x, y};
            found = true;
        }
    };
    for (std::int64_t x = 0; x <= bound; ++x) {
        const std::int64_t disc = 4 * p - 3 * x * x;
        if (disc < 0) break;
        auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
        while (s > 0 && s * s > disc) --s;
        while ((s + 1) * (s + 1) <= disc) ++s;
        if (s * s != disc) continue;
        if ((x + s) % 2 == 0) consider(x, (x + s) / 2);
        if ((x - s) % 2 == 0) consider(x, (x - s) / 2);
        if (found && x > best.re) break;  // later x cannot improve the lexicographic pick
    }
    if (!found) throw std::logic_error("pi_above: no norm-p element found");
    return best;
}

std::pair<Eisenstein, Eisenstein> primary_associate(Eisenstein z) {
    if (norm(z) % 3 == 0)
        throw std::invalid_argument("primary_associate: argument divisible by 1 - w");
    for (const auto& u : units()) {
        Eisenstein cand = u * z;
        if (is_primary(cand)) return {u, cand};
    }
    throw std::logic_error("primary_associate: no primary associate found");
}

}  // namespace cubicloc
