#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "cubicloc/cubic_residue.hpp"
#include "cubicloc/eisenstein.hpp"

using namespace cubicloc;

namespace {

// independent oracle: the set of nonzero cubes mod p by exhaustion
std::set<std::int64_t> cubes_mod(std::int64_t p) {
    std::set<std::int64_t> s;
    for (std::int64_t x = 1; x < p; ++x) s.insert(x * x * x % p);
    return s;
}

std::vector<Eisenstein> primary_primes_up_to_norm(std::int64_t bound) {
    std::vector<Eisenstein> out;
    for (std::int64_t x = -40; x <= 40; ++x)
        for (std::int64_t y = -40; y <= 40; ++y) {
            const Eisenstein z{x, y};
            const std::int64_t n = norm(z);
            if (n < 2 || n >= bound || n % 3 == 0) continue;
            if (is_primary(z) && is_prime_element(z)) out.push_back(z);
        }
    return out;
}

}  // namespace

TEST_CASE("cubic value algebra") {
    CHECK(CubicValue::Omega * CubicValue::Omega == CubicValue::OmegaSq);
    CHECK(CubicValue::Omega * CubicValue::OmegaSq == CubicValue::One);
    CHECK(CubicValue::Zero * CubicValue::Omega == CubicValue::Zero);
    CHECK(conj(CubicValue::Omega) == CubicValue::OmegaSq);
    CHECK(conj(CubicValue::One) == CubicValue::One);
    CHECK(conj(CubicValue::Zero) == CubicValue::Zero);
}

TEST_CASE("symbol basics: divisibility, cubes, known non-cube") {
    const Eisenstein pi7 = pi_above(7);
    // alpha divisible by pi
    CHECK(power_residue_symbol(pi7 * Eisenstein{2, 5}, pi7) == CubicValue::Zero);
    // a cube coprime to pi maps to One
    const Eisenstein g{2, 1};
    CHECK(power_residue_symbol(g * g * g, pi7) == CubicValue::One);
    // 2 is not a cube mod 7 (cubes are {1, 6})
    CHECK(power_residue_symbol(Eisenstein{2, 0}, pi7) != CubicValue::One);
    CHECK(power_residue_symbol(Eisenstein{2, 0}, pi7) != CubicValue::Zero);

    CHECK_THROWS_AS(power_residue_symbol(g, Eisenstein{1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(power_residue_symbol(g, Eisenstein{7, 0}), std::invalid_argument);
}

TEST_CASE("chi examples") {
    CHECK(chi(7, 6) == CubicValue::One);   // 3^3 = 27 = 6 mod 7
    CHECK(chi(7, 7) == CubicValue::Zero);
    CHECK(chi(13, 5) == CubicValue::One);  // 7^3 = 343 = 5 mod 13
    CHECK(chi(7, 2) != CubicValue::One);
    CHECK_THROWS_AS(chi(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(chi(9, 1), std::invalid_argument);
}

TEST_CASE("chi agrees with the cube oracle for p < 500") {
    for (std::int64_t p = 7; p < 500; ++p) {
        if (!is_rational_prime(p) || p % 3 != 1) continue;
        const auto cubes = cubes_mod(p);
        const auto cm = CharacterModulus::make(p);
        for (std::int64_t n = 1; n < p; ++n) {
            const bool is_cube = cubes.count(n) == 1;
            CHECK(cube_indicator(cm, n) == (is_cube ? 1 : 0));
            CHECK((chi(p, n) == CubicValue::One) == is_cube);
        }
    }
}

TEST_CASE("chi multiplicativity and periodicity") {
    std::mt19937 rng(99);
    const std::int64_t ps[] = {7, 13, 19, 31, 37, 43, 61, 103, 151};
    std::uniform_int_distribution<std::int64_t> pick(0, 8);
    std::uniform_int_distribution<std::int64_t> val(1, 1 << 20);
    for (int i = 0; i < 10000; ++i) {
        const std::int64_t p = ps[pick(rng)];
        const std::int64_t m = val(rng), n = val(rng);
        CHECK(chi(p, m * n) == chi(p, m) * chi(p, n));
        CHECK(chi(p, n) == chi(p, n + p));
    }
}

TEST_CASE("conjugation law: symbol(alpha, pi)^2 = symbol(conj alpha, conj pi)") {
    const auto primes = primary_primes_up_to_norm(1000);
    std::mt19937 rng(1234);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<std::int64_t> coord(-15, 15);
    int checked = 0;
    while (checked < 2000) {
        const Eisenstein pi = primes[pick(rng)];
        Eisenstein alpha{coord(rng), coord(rng)};
        if (is_zero(alpha) || norm(alpha) % 3 == 0) continue;
        alpha = primary_associate(alpha).second;
        const CubicValue lhs = power_residue_symbol(alpha, pi);
        const CubicValue rhs = power_residue_symbol(conj(alpha), conj(pi));
        CHECK(lhs * lhs == rhs);
        ++checked;
    }
}

TEST_CASE("cubic reciprocity for primary primes of norm < 1000") {
    const auto primes = primary_primes_up_to_norm(1000);
    REQUIRE(primes.size() > 20);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const Eisenstein pi = primes[i], theta = primes[j];
            if (norm(pi) == norm(theta)) continue;  // excludes associates/conjugates
            CHECK(power_residue_symbol(pi, theta) == power_residue_symbol(theta, pi));
        }
}

TEST_CASE("character modulus construction rules") {
    const auto cm1 = CharacterModulus::make(1);
    CHECK(cm1.primes.empty());
    CHECK(cm1.pi_d == Eisenstein{1, 0});

    const auto cm91 = CharacterModulus::make(91);  // 7 * 13
    CHECK(cm91.primes == std::vector<std::int64_t>{7, 13});
    CHECK(norm(cm91.pi_d) == 91);

    CHECK_THROWS_AS(CharacterModulus::make(49), std::invalid_argument);   // not square-free
    CHECK_THROWS_AS(CharacterModulus::make(10), std::invalid_argument);   // 2, 5 not 1 mod 3
    CHECK_THROWS_AS(CharacterModulus::make(21), std::invalid_argument);   // 3 | d
    CHECK_THROWS_AS(CharacterModulus::make(0), std::invalid_argument);
}

TEST_CASE("chi_composite and cube_indicator") {
    const auto cm1 = CharacterModulus::make(1);
    CHECK(chi_composite(cm1, 5) == CubicValue::One);
    CHECK(cube_indicator(cm1, 999) == 1);

    const auto cm7 = CharacterModulus::make(7);
    for (std::int64_t n = 1; n < 30; ++n)
        if (n % 7) CHECK(chi_composite(cm7, n) == chi(7, n));

    // 6 is a cube mod 7 (27 = 6), 5 is a cube mod 13 (343 = 5); CRT value
    // congruent to both is a simultaneous cube, so chi_91 = One
    const auto cm91 = CharacterModulus::make(91);
    std::int64_t n91 = 0;
    for (std::int64_t n = 1; n < 91; ++n)
        if (n % 7 == 6 && n % 13 == 5) n91 = n;
    REQUIRE(n91 > 0);
    CHECK(chi_composite(cm91, n91) == CubicValue::One);
    CHECK(cube_indicator(cm91, n91) == 1);

    CHECK(cube_indicator(cm7, 6) == 1);
    CHECK(cube_indicator(cm7, 2) == 0);
    CHECK_THROWS_AS(cube_indicator(cm7, 14), std::invalid_argument);  // gcd > 1
}
