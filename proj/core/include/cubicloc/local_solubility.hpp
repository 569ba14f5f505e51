#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

// Local solubility of phi_{a,b}(x,y,z) = a x^3 + b y^3 - z^3 over Q_p,
// decided prime by prime.
//
// Fast path (soluble_at_p / soluble_everywhere):
//   - p not dividing ab, p not in {2,3,5,7}: soluble (nonsingular cubic,
//     Hasse-Weil gives a point with z != 0 mod p, Hensel lifts it);
//   - p in {2,5,7}, p not dividing ab: soluble, witness by exhaustive
//     search mod p;
//   - p = 3: soluble iff phi has a solution mod 27 with a coordinate not
//     divisible by 3 (strong Hensel);
//   - p | ab, p = 2 mod 3: soluble (cubing is a bijection mod p);
//   - p | ab, p = 1 mod 3, say p | a: soluble iff b is a cube mod p,
//     decided through the cubic character.
// The p | ab branches assume a, b square-free, coprime, 3 not dividing ab.
//
// brute_force_oracle_at_p is the independent check: pure search for a
// Hensel-liftable solution, no characters, no table shortcuts.

namespace cubicloc {

struct FormCoefficients {
    std::int64_t a{1};
    std::int64_t b{1};

    friend bool operator==(const FormCoefficients&, const FormCoefficients&) = default;
};

// a, b >= 1, square-free, coprime, 3 does not divide ab
bool satisfies_counting_predicate(FormCoefficients f);

enum class VerdictReason : std::uint8_t {
    LargePrimeGood,        // p >= 11, p not dividing ab
    SmallPrimeWitness,     // p in {2,5,7}, p not dividing ab; witness mod p
    Mod27Witness,          // p = 3; witness mod 27 (when soluble)
    InertDividesGood,      // p | ab, p = 2 mod 3
    CubeTest,              // p | ab, p = 1 mod 3; cubic character decision
    PreconditionViolated,  // p | ab branch hit with a form outside the predicate
    OracleSearch,          // verdict produced by the brute-force oracle
};

struct LocalVerdict {
    std::int64_t prime{};
    bool soluble{};
    VerdictReason reason{};
    std::optional<std::array<int, 3>> witness;  // SmallPrimeWitness / Mod27Witness
    char tested_coefficient{0};                 // CubeTest: 'a' or 'b'

    friend bool operator==(const LocalVerdict&, const LocalVerdict&) = default;
};

struct LocalReport {
    FormCoefficients form{};
    std::vector<LocalVerdict> verdicts;  // p = 3 first, then p | ab ascending
    bool everywhere_soluble{};

    friend bool operator==(const LocalReport&, const LocalReport&) = default;
};

// distinct prime factors, ascending
using PrimeFactorFn = std::function<std::vector<std::int64_t>(std::int64_t)>;
std::vector<std::int64_t> trial_division_factors(std::int64_t n);

// True iff a x^3 + b y^3 = z^3 mod 27 has a solution with (x,y,z) not all
// divisible by 3; depends only on (a mod 27, b mod 27). The first witness in
// lexicographic (x,y,z) order is reported when requested.
// Throws std::invalid_argument if 3 | ab.
bool is_admissible_mod27(std::int64_t a, std::int64_t b,
                         std::array<int, 3>* witness = nullptr);

// Verdict for one prime; never throws on forms outside the counting
// predicate, those get reason = PreconditionViolated on the p | ab and
// p = 3 branches. Throws std::invalid_argument if p is not prime.
LocalVerdict soluble_at_p(FormCoefficients f, std::int64_t p);

// Full report over p = 3 and every p | ab (other primes are soluble by the
// large/small prime cases and are not listed). Requires the counting
// predicate; throws std::invalid_argument otherwise.
LocalReport soluble_everywhere(FormCoefficients f,
                               const PrimeFactorFn& factors = trial_division_factors);

// Independent search oracle:
//   p = 3: solution mod 27 with a coordinate not divisible by 3;
//   p | ab, p != 3: nontrivial solution of the reduced form mod p
//     (p | a: b y^3 = z^3 with (y,z) != (0,0); symmetric when p | b);
//   otherwise: solution mod p, not all zero, with a partial derivative
//     (3ax^2, 3by^2, -3z^2) nonzero at a nonzero coordinate, so Hensel
//     lifting applies.
// Works for arbitrary integer a, b; the p | ab reading matches Q_p
// solubility under the counting predicate. Throws std::invalid_argument
// if p is not prime.
bool brute_force_oracle_at_p(std::int64_t a, std::int64_t b, std::int64_t p);

// Report assembled from the oracle at p = 3 and every p | ab.
LocalReport oracle_report(FormCoefficients f,
                          const PrimeFactorFn& factors = trial_division_factors);

}  // namespace cubicloc
