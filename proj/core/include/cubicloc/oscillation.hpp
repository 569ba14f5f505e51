#pragma once

#include <cstdint>
#include <vector>

#include "cubicloc/sieves.hpp"

// Desk-scale measurements of cubic-character sum cancellation.
//
// double_oscillation sums chi_d(e)^s * chi_e(d)^t over square-free d in
// (1, A], e in (1, B] whose prime factors are all 1 mod 3. Each term is 0
// or a cube root of unity; the sum is accumulated exactly as x + y*w over
// the basis {1, w} and |sum|^2 = x^2 - xy + y^2 is available as an exact
// integer before any float conversion.
//
// single_oscillation sums mu^2(e) chi_{d2}(e) chi_{d3}^2(e) / 3^{omega(e)}
// over square-free e in (B^{1/m}, B] whose prime factors are all i mod 3;
// weighted=false drops the 3^{-omega(e)} factor. Terms are scaled by
// 3^{K - omega(e)} with K fixed, so the numerator stays an exact integer
// pair over the common denominator 3^K.

namespace cubicloc {

struct OscillationSample {
    // echo of the query
    std::uint64_t A{}, B{};
    int s{}, t{};                 // double variant
    int m{}, residue_class{};     // single variant
    std::int64_t d2{1}, d3{1};    // single variant
    bool weighted{true};

    // exact sum: (x + y*w) / 3^denom_pow3
    std::int64_t x{}, y{};
    int denom_pow3{0};
    std::uint64_t term_count{};

    friend bool operator==(const OscillationSample&, const OscillationSample&) = default;

    // |numerator|^2 = x^2 - xy + y^2, exact
    unsigned __int128 abs_sq_numerator() const;
    double abs_value() const;   // |sum|
    double normalized() const;  // |sum| / term_count (0 when empty)
    double re() const;          // x - y/2 scaled by the denominator
    double im() const;          // y * sqrt(3)/2 scaled by the denominator
};

// values in (1, bound] that are square-free with every prime factor
// = residue_class mod 3
std::vector<std::uint32_t> restricted_squarefree_values(const SieveTables& tables,
                                                        std::uint64_t bound, int residue_class);

// Throws std::invalid_argument when (s,t) = (0,0) (the sum would be trivial)
// or when A, B < 2.
OscillationSample double_oscillation(const SieveTables& tables, std::uint64_t A, std::uint64_t B,
                                     int s, int t);

// Throws std::invalid_argument when d2 = d3 = 1, when d2, d3 are not
// coprime square-free with all prime factors 1 mod 3, when m <= 2, or when
// residue_class is not 1 or 2.
OscillationSample single_oscillation(const SieveTables& tables, std::uint64_t B, int m,
                                     std::int64_t d2, std::int64_t d3, int residue_class,
                                     bool weighted = true);

}  // namespace cubicloc
