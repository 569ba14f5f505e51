#include <doctest.h>

#include <stdexcept>

#include "cubicloc/sieves.hpp"

using namespace cubicloc;

TEST_CASE("squarefree bitmap against trial division") {
    const auto t = SieveTables::build(10000);
    auto squarefree_trial = [](std::uint64_t n) {
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0) return false;
        return n >= 1;
    };
    for (std::uint64_t n = 1; n <= 10000; ++n) CHECK(t.squarefree(n) == squarefree_trial(n));
}

TEST_CASE("limit 12 example") {
    const auto t = SieveTables::build(12);
    const bool expect[] = {false, true, true, true, false, true, true,
                           true,  false, false, true, true, false};
    for (std::uint64_t n = 1; n <= 12; ++n) CHECK(t.squarefree(n) == expect[n]);
    CHECK(t.smallest_prime_factor(12) == 2);
}

TEST_CASE("spf values") {
    const auto t = SieveTables::build(100);
    CHECK(t.smallest_prime_factor(12) == 2);
    CHECK(t.smallest_prime_factor(49) == 7);
    CHECK(t.smallest_prime_factor(97) == 97);
    CHECK(t.smallest_prime_factor(1) == 1);
    for (std::uint64_t n = 2; n <= 100; ++n) {
        const auto p = t.smallest_prime_factor(n);
        CHECK(n % p == 0);
        for (std::uint64_t d = 2; d < p; ++d) CHECK(n % d != 0);
    }
}

TEST_CASE("prime list") {
    const auto t = SieveTables::build(10000);
    CHECK(t.primes().size() == 1229);
    CHECK(t.primes().front() == 2);
    CHECK(t.primes().back() == 9973);
}

TEST_CASE("omega counts") {
    const auto t = SieveTables::build(1000);
    CHECK(omega_counts(1, t).omega == 0);
    CHECK(omega_counts(1, t).omega1 == 0);
    CHECK(omega_counts(14, t).omega == 2);   // 2 * 7
    CHECK(omega_counts(14, t).omega1 == 1);  // only 7 = 1 mod 3
    CHECK(omega_counts(35, t).omega == 2);   // 5 * 7
    CHECK(omega_counts(35, t).omega1 == 1);
    CHECK(omega_counts(91, t).omega1 == 2);  // 7 * 13
    CHECK_THROWS_AS(omega_counts(0, t), std::invalid_argument);
}

TEST_CASE("build guards") {
    CHECK_THROWS_AS(SieveTables::build(0), std::invalid_argument);
    CHECK_THROWS_AS(SieveTables::build(1'000'000'000ull), std::length_error);
}
