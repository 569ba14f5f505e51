#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cubicloc/counting.hpp"
#include "cubicloc/sieves.hpp"

// The leading constant of the pair-count asymptotic
//     N(A,B) ~ c * A*B / ((log A)^{1/3} (log B)^{1/3})
// and the machinery to compare measured counts against it.
//
// c2_truncated evaluates Gamma(2/3)^{-2} times the truncated Euler product
// of (1 + 2/(3^{w1(p)} p)) (1 - 1/p)^{4/3} in prime order; the product is
// only conditionally convergent (the factors are 1 -+ 2/(3p) + O(1/p^2)
// according to p mod 3), so the factors are folded in ascending prime
// order and the tail estimate is the last dyadic-block fluctuation.

namespace cubicloc {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline constexpr int kMinPrecisionDigits = 10;
inline constexpr int kMaxPrecisionDigits = 50;

// (1 + 2/(3^{w1(p)} p)) * (1 - 1/p)^{4/3}, w1(p) = 1 iff p = 1 mod 3
BigFloat euler_factor(std::int64_t p);

struct ConstantEstimate {
    std::uint64_t truncation_bound{};  // primes up to here included
    BigFloat partial_product{};
    BigFloat gamma_factor{};           // Gamma(2/3)^{-2}
    BigFloat c2_estimate{};            // gamma_factor * partial_product
    BigFloat tail_estimate{};          // |c2(P) - c2(P/2)|
    int digits{};                      // requested output digits

    friend bool operator==(const ConstantEstimate&, const ConstantEstimate&) = default;
};

// Truncated product over primes <= P. precision_digits controls emitted
// digits and must lie in [kMinPrecisionDigits, kMaxPrecisionDigits]
// (the working type carries 50 digits). Throws std::invalid_argument on
// P < 2 or precision outside that window.
ConstantEstimate c2_truncated(std::uint64_t P, int precision_digits = 30);

// Gamma(2/3), plus the independent reflection-formula cross-check
// Gamma(2/3)*Gamma(1/3) = 2*pi/sqrt(3); gamma_reflection_defect returns the
// absolute difference, which must vanish to working precision.
BigFloat gamma_two_thirds();
BigFloat gamma_reflection_defect();

// The constant actually attained by the counted pairs. The Euler-product
// constant above carries a (1 + 2/3) numerator at p = 3, but 3 | ab is
// excluded from the count, so the density calculation has a vanishing p = 3
// numerator (factor 3/5 relative to euler_factor(3)); the mod-27
// admissibility condition contributes the exact density 252/324. Both are
// exact rationals: main-term constant = (7/15) * c2_estimate.
BigFloat main_term_constant(const ConstantEstimate& est);

// c * A * B / ((log A)^{1/3} (log B)^{1/3}); requires A, B >= 2
double main_term(double A, double B, double c);

struct ComparisonReport {
    std::uint64_t A{}, B{};
    std::uint64_t observed{};       // N(A, B)
    std::uint64_t P{};              // Euler-product truncation used
    double c2{};                    // constant used in `predicted`
    double predicted{};
    double ratio{};                 // observed / predicted
    double error_budget{};          // 1/log A + 1/log B
    double elapsed_seconds{};

    friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

// Counts N(A, B) on the fast path and compares it with the main term built
// from main_term_constant(c2_truncated(P)).
ComparisonReport compare_to_main_term(const SieveTables& tables, std::uint64_t A, std::uint64_t B,
                                      std::uint64_t P = 1'000'000, unsigned threads = 0);

std::string to_fixed_string(const BigFloat& v, int digits);

}  // namespace cubicloc
