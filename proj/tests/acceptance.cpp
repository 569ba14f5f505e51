// Acceptance suite: every criterion below runs at full scale with its
// tolerance fixed in code and prints exactly one PASS/FAIL line. The exit
// code is the number of failed criteria.
//
//  1  mod-27 admissible table: 252 pairs, fixture verbatim, rows of 12/18
//  2  all coefficient pairs mod p in {2,5,7} have a nonzero solution mod p
//  3  cube_indicator == exhaustive cube search for every p = 1 mod 3 < 500
//  4  conjugation law and cubic reciprocity, primary primes of norm < 10^3
//  5  fast path == brute-force oracle over the whole 300 x 300 box
//  6  Euler-product estimates stabilize; Gamma(2/3) reflection cross-check
//  7  N/main-term ratio inside [0.5, 1.5] at 10^4, 10^5, 10^6, improving
//  8  oscillation sums: exact triangle bound and conjugation symmetry
//  9  counts are independent of the thread count

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cubicloc/admissible.hpp"
#include "cubicloc/asymptotics.hpp"
#include "cubicloc/counting.hpp"
#include "cubicloc/cubic_residue.hpp"
#include "cubicloc/eisenstein.hpp"
#include "cubicloc/local_solubility.hpp"
#include "cubicloc/oscillation.hpp"
#include "cubicloc/sieves.hpp"

using namespace cubicloc;

namespace {

struct Outcome {
    bool pass{};
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1_admissible_table() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto table = AdmissibleTable::generate();
    const auto fixture = load_admissible_fixture(CUBICLOC_FIXTURE_PATH);
    const auto diff = verify_against_fixture(table, fixture);
    int total = 0;
    bool rows_ok = true;
    for (auto [a, c] : table.row_counts()) {
        rows_ok = rows_ok && (c == 12 || c == 18);
        total += c;
    }
    const double dt = seconds_since(t0);
    const bool pass = table.size() == 252 && fixture.size() == 252 && diff.empty() && rows_ok &&
                      total == 252 && dt < 1.0;
    std::ostringstream ss;
    ss << table.size() << " pairs, " << diff.missing.size() + diff.extra.size()
       << " fixture diffs, rows 12/18 sum " << total << ", " << dt << " s";
    return {pass, ss.str()};
}

Outcome criterion2_small_prime_completeness() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream ss;
    for (std::int64_t p : {2, 5, 7}) {
        std::int64_t solvable = 0;
        for (std::int64_t a = 1; a < p; ++a)
            for (std::int64_t b = 1; b < p; ++b) {
                bool found = false;
                for (std::int64_t x = 0; x < p && !found; ++x)
                    for (std::int64_t y = 0; y < p && !found; ++y)
                        for (std::int64_t z = 0; z < p && !found; ++z) {
                            if (x == 0 && y == 0 && z == 0) continue;
                            const std::int64_t v = a * x * x * x + b * y * y * y - z * z * z;
                            found = ((v % p) + p) % p == 0;
                        }
                if (found) ++solvable;
            }
        pass = pass && solvable == (p - 1) * (p - 1);
        ss << "p=" << p << ": " << solvable << "/" << (p - 1) * (p - 1) << "  ";
    }
    const double dt = seconds_since(t0);
    pass = pass && dt < 1.0;
    ss << dt << " s";
    return {pass, ss.str()};
}

Outcome criterion3_character_correctness() {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checked = 0, agreed = 0;
    for (std::int64_t p = 7; p < 500; ++p) {
        if (!is_rational_prime(p) || p % 3 != 1) continue;
        std::set<std::int64_t> cubes;
        for (std::int64_t x = 1; x < p; ++x) cubes.insert(x * x * x % p);
        const auto cm = CharacterModulus::make(p);
        for (std::int64_t n = 1; n < p; ++n) {
            ++checked;
            if (cube_indicator(cm, n) == (cubes.count(n) ? 1 : 0)) ++agreed;
        }
    }
    const double dt = seconds_since(t0);
    const bool pass = checked > 0 && checked == agreed && dt < 10.0;
    std::ostringstream ss;
    ss << agreed << "/" << checked << " residues agree, " << dt << " s";
    return {pass, ss.str()};
}

Outcome criterion4_reciprocity_conjugation() {
    std::vector<Eisenstein> primes;
    for (std::int64_t x = -40; x <= 40; ++x)
        for (std::int64_t y = -40; y <= 40; ++y) {
            const Eisenstein z{x, y};
            const std::int64_t n = norm(z);
            if (n >= 2 && n < 1000 && n % 3 != 0 && is_primary(z) && is_prime_element(z))
                primes.push_back(z);
        }
    std::uint64_t recip_pairs = 0, conj_checks = 0;
    bool pass = !primes.empty();
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            const Eisenstein pi = primes[i], theta = primes[j];
            // conjugation law with the first prime as top argument
            const CubicValue s = power_residue_symbol(pi, theta);
            const CubicValue sc = power_residue_symbol(conj(pi), conj(theta));
            pass = pass && (s * s == sc);
            ++conj_checks;
            // reciprocity in its standard symmetric form, distinct norms
            if (j > i && norm(pi) != norm(theta)) {
                pass = pass && (s == power_residue_symbol(theta, pi));
                ++recip_pairs;
            }
        }
    }
    std::ostringstream ss;
    ss << primes.size() << " primary primes, " << recip_pairs << " reciprocity pairs, "
       << conj_checks << " conjugation checks";
    return {pass, ss.str()};
}

Outcome criterion5_oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto tables = SieveTables::build(300);
    const PrimeFactorFn sieve_factors = [&tables](std::int64_t n) {
        std::vector<std::int64_t> fs;
        for (std::uint32_t p : tables.prime_factors(static_cast<std::uint32_t>(n)))
            fs.push_back(p);
        return fs;
    };

    // per-pair, per-prime agreement over the whole box
    std::uint64_t pair_checks = 0;
    std::vector<std::uint8_t> grid(301 * 301, 0);
    bool pass = true;
    for (std::int64_t a = 1; a <= 300; ++a)
        for (std::int64_t b = 1; b <= 300; ++b) {
            const FormCoefficients f{a, b};
            if (!satisfies_counting_predicate(f)) continue;
            const auto fast = soluble_everywhere(f, sieve_factors);
            for (const auto& v : fast.verdicts)
                pass = pass && (v.soluble == brute_force_oracle_at_p(a, b, v.prime));
            grid[a * 301 + b] = fast.everywhere_soluble ? 1 : 0;
            ++pair_checks;
        }

    // oracle-mode pair grid and its prefix sums determine every oracle count
    std::vector<std::uint8_t> oracle_grid(301 * 301, 0);
    for (std::int64_t a = 1; a <= 300; ++a)
        for (std::int64_t b = 1; b <= 300; ++b) {
            const FormCoefficients f{a, b};
            if (!satisfies_counting_predicate(f)) continue;
            oracle_grid[a * 301 + b] = oracle_report(f, sieve_factors).everywhere_soluble ? 1 : 0;
            pass = pass && oracle_grid[a * 301 + b] == grid[a * 301 + b];
        }
    std::vector<std::uint64_t> prefix(301 * 301, 0);
    for (int a = 1; a <= 300; ++a)
        for (int b = 1; b <= 300; ++b)
            prefix[a * 301 + b] = prefix[(a - 1) * 301 + b] + prefix[a * 301 + b - 1] -
                                  prefix[(a - 1) * 301 + b - 1] + oracle_grid[a * 301 + b];

    // fast-path counts for every (A, B) <= 300 against those prefix sums
    for (std::uint64_t A = 1; A <= 300 && pass; ++A)
        for (std::uint64_t B = 1; B <= 300; ++B) {
            const auto f = count_soluble_pairs(tables, A, B, CountMode::FastPath);
            if (f.count != prefix[A * 301 + B]) {
                pass = false;
                break;
            }
        }
    // oracle-mode counts on a lattice (the mode is itself a per-pair loop)
    const auto fast300 = count_soluble_pairs(tables, 300, 300, CountMode::FastPath);
    const auto oracle300 = count_soluble_pairs(tables, 300, 300, CountMode::Oracle);
    pass = pass && fast300.count == oracle300.count;
    for (std::uint64_t A : {1, 7, 42, 123, 200, 300})
        for (std::uint64_t B : {2, 13, 77, 150, 249, 300}) {
            const auto o = count_soluble_pairs(tables, A, B, CountMode::Oracle);
            pass = pass && o.count == prefix[A * 301 + B];
        }

    const double dt = seconds_since(t0);
    pass = pass && dt < 300.0;
    std::ostringstream ss;
    ss << pair_checks << " predicate pairs, all 90601 fast counts match the oracle grid, "
       << "N(300,300) fast " << fast300.count << " == oracle " << oracle300.count << ", " << dt
       << " s";
    return {pass, ss.str()};
}

Outcome criterion6_constant_stability() {
    const auto e4 = c2_truncated(10'000);
    const auto e5 = c2_truncated(100'000);
    const auto e6 = c2_truncated(1'000'000);
    const BigFloat d45 = abs(e5.c2_estimate - e4.c2_estimate);
    const BigFloat d56 = abs(e6.c2_estimate - e5.c2_estimate);
    const BigFloat defect = gamma_reflection_defect();
    const bool pass = d56 < d45 && d56 < BigFloat("5e-3") && defect < BigFloat("1e-12");
    std::ostringstream ss;
    ss << "c2(1e6) = " << to_fixed_string(e6.c2_estimate, 15) << ", |d(1e5->1e6)| = "
       << to_fixed_string(d56, 3) << " < |d(1e4->1e5)| = " << to_fixed_string(d45, 3)
       << ", reflection defect " << to_fixed_string(defect, 3);
    return {pass, ss.str()};
}

Outcome criterion7_asymptotic_trend() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto est = c2_truncated(1'000'000);
    const double c = static_cast<double>(main_term_constant(est));
    const auto tables = SieveTables::build(1'000'000);

    double gaps[3] = {};
    double ratios[3] = {};
    bool pass = true;
    const std::uint64_t sizes[3] = {10'000, 100'000, 1'000'000};
    std::ostringstream ss;
    for (int i = 0; i < 3; ++i) {
        const auto res = count_soluble_pairs(tables, sizes[i], sizes[i]);
        const double mt = main_term(static_cast<double>(sizes[i]),
                                    static_cast<double>(sizes[i]), c);
        ratios[i] = static_cast<double>(res.count) / mt;
        gaps[i] = std::abs(ratios[i] - 1.0);
        pass = pass && ratios[i] >= 0.5 && ratios[i] <= 1.5;
        ss << "N(1e" << 4 + i << ") = " << res.count << " ratio " << ratios[i] << "  ";
    }
    pass = pass && gaps[1] <= gaps[0] && gaps[2] <= gaps[1];

    // the 30-minute budget is stated for an 8-core machine; normalize to
    // the cores actually present
    const double dt = seconds_since(t0);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const double budget = 1800.0 * (8.0 / std::min(8u, hw));
    pass = pass && dt < budget;
    ss << dt << " s (budget " << budget << " s on " << hw << " cores)";
    return {pass, ss.str()};
}

Outcome criterion8_oscillation_exactness() {
    const auto tables = SieveTables::build(2000);
    bool pass = true;
    std::uint64_t checks = 0;
    std::ostringstream detail;
    detail.precision(4);
    for (std::uint64_t range : {250, 500, 1000, 2000}) {
        for (int s = 0; s <= 2; ++s)
            for (int t = 0; t <= 2; ++t) {
                if (s == 0 && t == 0) continue;
                const auto r = double_oscillation(tables, range, range, s, t);
                const auto tc = static_cast<unsigned __int128>(r.term_count);
                pass = pass && r.abs_sq_numerator() <= tc * tc;
                const auto cj = double_oscillation(tables, range, range, (2 * s) % 3, (2 * t) % 3);
                pass = pass && cj.x == r.x - r.y && cj.y == -r.y;
                checks += 2;
                if (s == 1 && t == 1)
                    detail << "|S(" << range << ")|/n=" << r.normalized() << " ";
            }
    }
    std::ostringstream ss;
    ss << checks << " exact checks over dyadic ranges; normalized (s=t=1): " << detail.str();
    return {pass, ss.str()};
}

Outcome criterion9_determinism() {
    const auto tables = SieveTables::build(10'000);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::uint64_t> dim(1, 10'000);
    const unsigned many = std::max(2u, std::thread::hardware_concurrency());
    bool pass = true;
    for (int i = 0; i < 20; ++i) {
        const std::uint64_t A = dim(rng), B = dim(rng);
        const auto one = count_soluble_pairs(tables, A, B, CountMode::FastPath, 1);
        const auto par = count_soluble_pairs(tables, A, B, CountMode::FastPath, many);
        pass = pass && one.count == par.count;
    }
    std::ostringstream ss;
    ss << "20 random boxes <= 1e4, threads 1 vs " << many;
    return {pass, ss.str()};
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int number;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "admissible table matches the fixture", criterion1_admissible_table},
        {2, "small-prime completeness mod 2, 5, 7", criterion2_small_prime_completeness},
        {3, "cube indicator vs exhaustive search, p < 500", criterion3_character_correctness},
        {4, "conjugation law and cubic reciprocity", criterion4_reciprocity_conjugation},
        {5, "fast path vs oracle over the 300 x 300 box", criterion5_oracle_equivalence},
        {6, "Euler-product stability and Gamma cross-check", criterion6_constant_stability},
        {7, "asymptotic ratio window and trend", criterion7_asymptotic_trend},
        {8, "oscillation exactness at dyadic ranges", criterion8_oscillation_exactness},
        {9, "thread-count determinism", criterion9_determinism},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.number)) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %d: %s  (%s)\n", out.pass ? "PASS" : "FAIL", c.number, c.name,
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures;
}
