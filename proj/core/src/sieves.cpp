#include "cubicloc/sieves.hpp"

#include <stdexcept>
#include <string>

namespace cubicloc {

SieveTables SieveTables::build(std::uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("SieveTables: limit must be >= 1");
    const std::uint64_t bytes = (limit + 1) * (sizeof(std::uint32_t) + 1);
    if (bytes > kMemoryBudgetBytes)
        throw std::length_error("SieveTables: limit " + std::to_string(limit) +
                                " exceeds the memory budget");

    SieveTables t;
    t.limit_ = limit;
    t.squarefree_.assign(limit + 1, 1);
    t.squarefree_[0] = 0;
    t.spf_.assign(limit + 1, 0);

    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.spf_[i] == 0) {
            t.primes_.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t m = i; m <= limit; m += i)
                if (t.spf_[m] == 0) t.spf_[m] = static_cast<std::uint32_t>(i);
            if (i * i <= limit)
                for (std::uint64_t m = i * i; m <= limit; m += i * i) t.squarefree_[m] = 0;
        }
    }
    if (limit >= 1) t.spf_[1] = 1;
    return t;
}

std::vector<std::uint32_t> SieveTables::prime_factors(std::uint32_t n) const {
    std::vector<std::uint32_t> fs;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        fs.push_back(p);
        while (n % p == 0) n /= p;
    }
    return fs;
}

OmegaCounts omega_counts(std::uint32_t n, const SieveTables& tables) {
    if (n < 1 || n > tables.limit())
        throw std::invalid_argument("omega_counts: n outside sieve range");
    OmegaCounts c;
    std::uint32_t m = n;
    while (m > 1) {
        const std::uint32_t p = tables.smallest_prime_factor(m);
        ++c.omega;
        if (p % 3 == 1) ++c.omega1;
        while (m % p == 0) m /= p;
    }
    return c;
}

}  // namespace cubicloc
