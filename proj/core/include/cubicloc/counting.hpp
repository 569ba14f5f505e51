#pragma once

#include <cstdint>

#include "cubicloc/sieves.hpp"

// N(A, B): the number of pairs 1 <= a <= A, 1 <= b <= B with a, b
// square-free, coprime, 3 not dividing ab, and a x^3 + b y^3 - z^3 soluble
// in every Q_p. FastPath decides the pair through the mod-27 table and
// cube tests at primes p = 1 mod 3 dividing ab; Oracle re-decides every
// pair with the brute-force search oracle. The two modes must agree.

namespace cubicloc {

enum class CountMode : std::uint8_t { FastPath, Oracle };

struct CountResult {
    std::uint64_t A{};
    std::uint64_t B{};
    std::uint64_t count{};
    CountMode method{CountMode::FastPath};
    double elapsed_seconds{};

    friend bool operator==(const CountResult&, const CountResult&) = default;
};

// threads = 0 picks std::thread::hardware_concurrency(). The a-range is
// split into contiguous chunks whose exact integer counts are summed in
// chunk order, so the result does not depend on the thread count.
CountResult count_soluble_pairs(const SieveTables& tables, std::uint64_t A, std::uint64_t B,
                                CountMode mode = CountMode::FastPath, unsigned threads = 0);

}  // namespace cubicloc
