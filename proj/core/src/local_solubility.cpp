#include "cubicloc/local_solubility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cubicloc/cubic_residue.hpp"
#include "cubicloc/eisenstein.hpp"

namespace cubicloc {

namespace {

std::int64_t mod_pos(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

bool squarefree_trial(std::int64_t n) {
    if (n < 1) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
        while (n % d == 0) n /= d;
    }
    return true;
}

}  // namespace

bool satisfies_counting_predicate(FormCoefficients f) {
    if (f.a < 1 || f.b < 1) return false;
    if (f.a % 3 == 0 || f.b % 3 == 0) return false;
    if (std::gcd(f.a, f.b) != 1) return false;
    return squarefree_trial(f.a) && squarefree_trial(f.b);
}

std::vector<std::int64_t> trial_division_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    if (n < 0) n = -n;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        fs.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

bool is_admissible_mod27(std::int64_t a, std::int64_t b, std::array<int, 3>* witness) {
    const std::int64_t ar = mod_pos(a, 27), br = mod_pos(b, 27);
    if (ar % 3 == 0 || br % 3 == 0)
        throw std::invalid_argument("is_admissible_mod27: requires 3 not dividing ab");
    static const auto cubes = [] {
        std::array<int, 27> c{};
        for (int x = 0; x < 27; ++x) c[x] = x * x * x % 27;
        return c;
    }();
    for (int x = 0; x < 27; ++x)
        for (int y = 0; y < 27; ++y) {
            const int lhs = static_cast<int>((ar * cubes[x] + br * cubes[y]) % 27);
            for (int z = 0; z < 27; ++z) {
                if (x % 3 == 0 && y % 3 == 0 && z % 3 == 0) continue;
                if (lhs == cubes[z]) {
                    if (witness) *witness = {x, y, z};
                    return true;
                }
            }
        }
    return false;
}

LocalVerdict soluble_at_p(FormCoefficients f, std::int64_t p) {
    if (!is_rational_prime(p)) throw std::invalid_argument("soluble_at_p: p is not prime");
    LocalVerdict v;
    v.prime = p;

    if (p == 3) {
        if (f.a % 3 == 0 || f.b % 3 == 0) {
            v.reason = VerdictReason::PreconditionViolated;
            v.soluble = false;
            return v;
        }
        std::array<int, 3> w{};
        v.soluble = is_admissible_mod27(f.a, f.b, &w);
        v.reason = VerdictReason::Mod27Witness;
        if (v.soluble) v.witness = w;
        return v;
    }

    const bool divides_a = mod_pos(f.a, p) == 0;
    const bool divides_b = mod_pos(f.b, p) == 0;

    if (divides_a || divides_b) {
        if (!satisfies_counting_predicate(f)) {
            v.reason = VerdictReason::PreconditionViolated;
            v.soluble = false;
            return v;
        }
        if (p % 3 == 2) {
            v.reason = VerdictReason::InertDividesGood;
            v.soluble = true;
            return v;
        }
        // p = 1 mod 3; coprimality puts p in exactly one of a, b
        const std::int64_t tested = divides_a ? f.b : f.a;
        v.reason = VerdictReason::CubeTest;
        v.tested_coefficient = divides_a ? 'b' : 'a';
        v.soluble = cube_indicator(CharacterModulus::make(p), tested) == 1;
        return v;
    }

    if (p == 2 || p == 5 || p == 7) {
        const std::int64_t ar = mod_pos(f.a, p), br = mod_pos(f.b, p);
        v.reason = VerdictReason::SmallPrimeWitness;
        v.soluble = false;
        for (int x = 0; x < p && !v.soluble; ++x)
            for (int y = 0; y < p && !v.soluble; ++y)
                for (int z = 0; z < p && !v.soluble; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (mod_pos(ar * x * x * x + br * y * y * y - z * z * z, p) == 0) {
                        v.soluble = true;
                        v.witness = {x, y, z};
                    }
                }
        return v;
    }

    v.reason = VerdictReason::LargePrimeGood;
    v.soluble = true;
    return v;
}

namespace {

LocalReport report_over_relevant_primes(FormCoefficients f, const PrimeFactorFn& factors,
                                        bool use_oracle) {
    LocalReport rep;
    rep.form = f;
    std::vector<std::int64_t> ps{3};
    for (std::int64_t p : factors(f.a))
        if (p != 3) ps.push_back(p);
    for (std::int64_t p : factors(f.b))
        if (p != 3) ps.push_back(p);
    std::sort(ps.begin() + 1, ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    rep.everywhere_soluble = true;
    for (std::int64_t p : ps) {
        LocalVerdict v;
        if (use_oracle) {
            v.prime = p;
            v.reason = VerdictReason::OracleSearch;
            v.soluble = brute_force_oracle_at_p(f.a, f.b, p);
        } else {
            v = soluble_at_p(f, p);
        }
        rep.everywhere_soluble = rep.everywhere_soluble && v.soluble;
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

}  // namespace

LocalReport soluble_everywhere(FormCoefficients f, const PrimeFactorFn& factors) {
    if (!satisfies_counting_predicate(f))
        throw std::invalid_argument(
            "soluble_everywhere: (a,b) must be positive, square-free, coprime, with 3 not "
            "dividing ab");
    return report_over_relevant_primes(f, factors, /*use_oracle=*/false);
}

LocalReport oracle_report(FormCoefficients f, const PrimeFactorFn& factors) {
    return report_over_relevant_primes(f, factors, /*use_oracle=*/true);
}

bool brute_force_oracle_at_p(std::int64_t a, std::int64_t b, std::int64_t p) {
    if (!is_rational_prime(p))
        throw std::invalid_argument("brute_force_oracle_at_p: p is not prime");

    if (p == 3) {
        const std::int64_t ar = mod_pos(a, 27), br = mod_pos(b, 27);
        for (int x = 0; x < 27; ++x)
            for (int y = 0; y < 27; ++y)
                for (int z = 0; z < 27; ++z) {
                    if (x % 3 == 0 && y % 3 == 0 && z % 3 == 0) continue;
                    if (mod_pos(ar * x * x * x + br * y * y * y - z * z * z, 27) == 0) return true;
                }
        return false;
    }

    const std::int64_t ar = mod_pos(a, p), br = mod_pos(b, p);

    if (ar == 0 || br == 0) {
        // reduced form: p | a leaves b y^3 - z^3; a nontrivial zero mod p
        // lifts by Hensel since p does not divide 3 here
        const std::int64_t c = (ar == 0) ? br : ar;
        for (std::int64_t u = 0; u < p; ++u)
            for (std::int64_t w = 0; w < p; ++w) {
                if (u == 0 && w == 0) continue;
                if (mod_pos(c * u * u * u - w * w * w, p) == 0) return true;
            }
        return false;
    }

    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            for (std::int64_t z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (mod_pos(ar * x * x * x + br * y * y * y - z * z * z, p) != 0) continue;
                const bool liftable =
                    (x != 0 && mod_pos(3 * ar * x * x, p) != 0) ||
                    (y != 0 && mod_pos(3 * br * y * y, p) != 0) ||
                    (z != 0 && mod_pos(-3 * z * z, p) != 0);
                if (liftable) return true;
            }
    return false;
}

}  // namespace cubicloc
