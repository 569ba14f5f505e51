#include "cubicloc/oscillation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cubicloc/cubic_residue.hpp"

namespace cubicloc {

namespace {

// chi_p as an exponent table: table[r] = k with chi_p(r) = w^k, and 3 for
// the zero value at r = 0. Anchored to the canonical chi_p by one symbol
// evaluation at a non-cube; the rest is rational arithmetic mod p.
std::vector<std::uint8_t> chi_class_table(std::int64_t p) {
    std::vector<std::uint8_t> cls(p, 3);
    std::vector<std::int64_t> power(p, 0);
    auto powmod = [p](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (std::int64_t r = 1; r < p; ++r) power[r] = powmod(r, (p - 1) / 3);
    std::int64_t anchor = 0;
    for (std::int64_t r = 1; r < p && !anchor; ++r)
        if (power[r] != 1) anchor = r;
    const CubicValue v = chi(p, anchor);  // w or w^2
    const std::uint8_t anchor_class = (v == CubicValue::Omega) ? 1 : 2;
    const std::int64_t h = power[anchor];
    for (std::int64_t r = 1; r < p; ++r) {
        if (power[r] == 1)
            cls[r] = 0;
        else if (power[r] == h)
            cls[r] = anchor_class;
        else
            cls[r] = static_cast<std::uint8_t>(3 - anchor_class);
    }
    return cls;
}

struct ChiEvaluator {
    std::unordered_map<std::int64_t, std::vector<std::uint8_t>> tables;

    // exponent of chi_n(arg) as w^k, or -1 when the value is 0
    int chi_class(const std::vector<std::int64_t>& primes_of_n, std::int64_t arg) {
        int k = 0;
        for (std::int64_t p : primes_of_n) {
            auto it = tables.find(p);
            if (it == tables.end()) it = tables.emplace(p, chi_class_table(p)).first;
            const std::uint8_t c = it->second[arg % p];
            if (c == 3) return -1;
            k += c;
        }
        return k % 3;
    }
};

void add_root_of_unity(std::int64_t& x, std::int64_t& y, int k, std::int64_t scale) {
    switch (k) {
        case 0: x += scale; break;
        case 1: y += scale; break;
        default: x -= scale; y -= scale; break;  // w^2 = -1 - w
    }
}

}  // namespace

unsigned __int128 OscillationSample::abs_sq_numerator() const {
    const auto xi = static_cast<__int128>(x);
    const auto yi = static_cast<__int128>(y);
    return static_cast<unsigned __int128>(xi * xi - xi * yi + yi * yi);
}

double OscillationSample::abs_value() const {
    const double n2 = static_cast<double>(abs_sq_numerator());
    return std::sqrt(n2) / std::pow(3.0, denom_pow3);
}

double OscillationSample::normalized() const {
    if (term_count == 0) return 0.0;
    return abs_value() / static_cast<double>(term_count);
}

double OscillationSample::re() const {
    return (static_cast<double>(x) - static_cast<double>(y) / 2.0) / std::pow(3.0, denom_pow3);
}

double OscillationSample::im() const {
    return static_cast<double>(y) * std::sqrt(3.0) / 2.0 / std::pow(3.0, denom_pow3);
}

std::vector<std::uint32_t> restricted_squarefree_values(const SieveTables& tables,
                                                        std::uint64_t bound, int residue_class) {
    if (residue_class != 1 && residue_class != 2)
        throw std::invalid_argument("restricted_squarefree_values: residue class must be 1 or 2");
    if (bound > tables.limit())
        throw std::length_error("restricted_squarefree_values: bound exceeds the sieve limit");
    std::vector<std::uint32_t> out;
    for (std::uint64_t v = 2; v <= bound; ++v) {
        if (!tables.squarefree(v)) continue;
        bool ok = true;
        std::uint32_t m = static_cast<std::uint32_t>(v);
        while (m > 1 && ok) {
            const std::uint32_t p = tables.smallest_prime_factor(m);
            ok = (p % 3 == static_cast<std::uint32_t>(residue_class));
            while (m % p == 0) m /= p;
        }
        if (ok) out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

OscillationSample double_oscillation(const SieveTables& tables, std::uint64_t A, std::uint64_t B,
                                     int s, int t) {
    if (s == 0 && t == 0)
        throw std::invalid_argument("double_oscillation: (s,t) = (0,0) is excluded");
    if (s < 0 || s > 2 || t < 0 || t > 2)
        throw std::invalid_argument("double_oscillation: s, t must lie in {0,1,2}");
    if (A < 2 || B < 2) throw std::invalid_argument("double_oscillation: A, B must be >= 2");

    OscillationSample sample;
    sample.A = A;
    sample.B = B;
    sample.s = s;
    sample.t = t;

    const auto ds = restricted_squarefree_values(tables, A, 1);
    const auto es = restricted_squarefree_values(tables, B, 1);

    ChiEvaluator chis;
    std::unordered_map<std::uint32_t, std::vector<std::int64_t>> factor_cache;
    auto factors_of = [&](std::uint32_t n) -> const std::vector<std::int64_t>& {
        auto it = factor_cache.find(n);
        if (it == factor_cache.end()) {
            std::vector<std::int64_t> fs;
            for (std::uint32_t p : tables.prime_factors(n)) fs.push_back(p);
            it = factor_cache.emplace(n, std::move(fs)).first;
        }
        return it->second;
    };

    for (std::uint32_t d : ds) {
        const auto& fd = factors_of(d);
        for (std::uint32_t e : es) {
            ++sample.term_count;
            // gcd(d, e) > 1 zeroes whichever symbol carries a positive
            // exponent, hence the whole term
            if (std::gcd(d, e) != 1) continue;
            int k = 0;
            if (s != 0) {
                const int kd = chis.chi_class(fd, e);
                k += s * kd;
            }
            if (t != 0) {
                const int ke = chis.chi_class(factors_of(e), d);
                k += t * ke;
            }
            add_root_of_unity(sample.x, sample.y, k % 3, 1);
        }
    }
    return sample;
}

OscillationSample single_oscillation(const SieveTables& tables, std::uint64_t B, int m,
                                     std::int64_t d2, std::int64_t d3, int residue_class,
                                     bool weighted) {
    if (m <= 2) throw std::invalid_argument("single_oscillation: m must be > 2");
    if (residue_class != 1 && residue_class != 2)
        throw std::invalid_argument("single_oscillation: residue class must be 1 or 2");
    if (d2 == 1 && d3 == 1)
        throw std::invalid_argument("single_oscillation: d2 = d3 = 1 gives the trivial character");
    const CharacterModulus cm2 = CharacterModulus::make(d2);
    const CharacterModulus cm3 = CharacterModulus::make(d3);
    if (std::gcd(d2, d3) != 1)
        throw std::invalid_argument("single_oscillation: d2, d3 must be coprime");

    OscillationSample sample;
    sample.B = B;
    sample.m = m;
    sample.d2 = d2;
    sample.d3 = d3;
    sample.residue_class = residue_class;
    sample.weighted = weighted;

    // e > B^{1/m}  <=>  e^m > B, decided in exact integer arithmetic
    auto above_root = [&](std::uint64_t e) {
        unsigned __int128 pw = 1;
        for (int i = 0; i < m; ++i) {
            pw *= e;
            if (pw > B) return true;
        }
        return pw > B;
    };

    std::vector<std::uint32_t> es;
    for (std::uint32_t e : restricted_squarefree_values(tables, B, residue_class))
        if (above_root(e)) es.push_back(e);

    // common denominator 3^K, K = max omega(e) over the range
    int K = 0;
    if (weighted)
        for (std::uint32_t e : es) K = std::max(K, omega_counts(e, tables).omega);
    sample.denom_pow3 = K;

    ChiEvaluator chis;
    for (std::uint32_t e : es) {
        ++sample.term_count;
        if (std::gcd<std::int64_t>(e, d2 * d3) != 1) continue;  // zero term
        const int k2 = cm2.primes.empty() ? 0 : chis.chi_class(cm2.primes, e);
        const int k3 = cm3.primes.empty() ? 0 : chis.chi_class(cm3.primes, e);
        const int k = (k2 + 2 * k3) % 3;  // chi^2 = conjugate
        std::int64_t scale = 1;
        if (weighted) {
            const int w = omega_counts(e, tables).omega;
            for (int i = 0; i < K - w; ++i) scale *= 3;
        }
        add_root_of_unity(sample.x, sample.y, k, scale);
    }
    return sample;
}

}  // namespace cubicloc
