#pragma once

#include <cstdint>
#include <vector>

namespace cubicloc {

// Square-free bitmap and smallest-prime-factor table over [1, limit],
// built once and shared read-only by the counting paths.
class SieveTables {
public:
    // build refuses limits whose tables would exceed the memory budget
    // (std::length_error); limit must be >= 1 (std::invalid_argument)
    static SieveTables build(std::uint64_t limit);

    static constexpr std::uint64_t kMemoryBudgetBytes = 1'500'000'000;

    std::uint64_t limit() const { return limit_; }

    bool squarefree(std::uint64_t n) const { return squarefree_[n]; }
    std::uint32_t smallest_prime_factor(std::uint64_t n) const { return spf_[n]; }

    // distinct prime factors of n, ascending
    std::vector<std::uint32_t> prime_factors(std::uint32_t n) const;

    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::uint64_t limit_{0};
    std::vector<std::uint8_t> squarefree_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

struct OmegaCounts {
    int omega{};    // distinct prime factors
    int omega1{};   // those = 1 mod 3
};

OmegaCounts omega_counts(std::uint32_t n, const SieveTables& tables);

}  // namespace cubicloc
