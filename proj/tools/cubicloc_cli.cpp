// cubicloc: local solubility of a x^3 + b y^3 = z^3, pair counting over
// coefficient boxes, the main-term constant, and character-sum experiments.
// Machine-readable output: JSON on stdout for reports, CSV for oscillation
// tables. Errors go to stderr as single-line JSON.
// Exit codes: 0 ok, 1 computation refused (precondition), 2 usage.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubicloc/admissible.hpp"
#include "cubicloc/asymptotics.hpp"
#include "cubicloc/counting.hpp"
#include "cubicloc/local_solubility.hpp"
#include "cubicloc/oscillation.hpp"
#include "cubicloc/reports.hpp"
#include "cubicloc/sieves.hpp"

namespace {

using cubicloc::json;

int emit_error(const char* kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
    return kind == std::string("usage") ? 2 : 1;
}

struct AdmissibleArgs {
    std::string verify_path;
    std::string format = "plain";
};

int run_admissible(const AdmissibleArgs& args) {
    const auto table = cubicloc::AdmissibleTable::generate();
    if (!args.verify_path.empty()) {
        const auto fixture = cubicloc::load_admissible_fixture(args.verify_path);
        const auto diff = cubicloc::verify_against_fixture(table, fixture);
        if (args.format == "json") {
            json j{{"pairs", table.size()},
                   {"diffs", diff.missing.size() + diff.extra.size()},
                   {"missing", diff.missing},
                   {"extra", diff.extra}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << table.size() << " pairs, " << diff.missing.size() + diff.extra.size()
                      << " diffs\n";
            for (auto [a, b] : diff.missing) std::cout << "missing: " << a << "," << b << "\n";
            for (auto [a, b] : diff.extra) std::cout << "extra: " << a << "," << b << "\n";
        }
        return diff.empty() ? 0 : 1;
    }
    if (args.format == "json") {
        json j{{"count", table.size()}, {"pairs", table.pairs()}, {"row_counts", json::object()}};
        for (auto [a, c] : table.row_counts()) j["row_counts"][std::to_string(a)] = c;
        std::cout << j.dump() << "\n";
    } else {
        for (auto [a, b] : table.pairs()) std::cout << a << "," << b << "\n";
    }
    return 0;
}

struct SolvableArgs {
    std::int64_t a{}, b{};
    std::int64_t prime{0};
    bool oracle{false};
};

int run_solvable(const SolvableArgs& args) {
    const cubicloc::FormCoefficients form{args.a, args.b};
    if (args.prime) {
        cubicloc::LocalVerdict v;
        if (args.oracle) {
            v.prime = args.prime;
            v.reason = cubicloc::VerdictReason::OracleSearch;
            v.soluble = cubicloc::brute_force_oracle_at_p(args.a, args.b, args.prime);
        } else {
            v = cubicloc::soluble_at_p(form, args.prime);
        }
        std::cout << json(v).dump() << "\n";
        return 0;
    }
    const auto report =
        args.oracle ? cubicloc::oracle_report(form) : cubicloc::soluble_everywhere(form);
    std::cout << json(report).dump() << "\n";
    return 0;
}

struct CountArgs {
    std::uint64_t A{}, B{};
    bool oracle{false};
    unsigned threads{0};
};

int run_count(const CountArgs& args) {
    const auto tables = cubicloc::SieveTables::build(std::max(args.A, args.B));
    const auto res = cubicloc::count_soluble_pairs(
        tables, args.A, args.B,
        args.oracle ? cubicloc::CountMode::Oracle : cubicloc::CountMode::FastPath, args.threads);
    std::cout << json(res).dump() << "\n";
    return 0;
}

struct ConstantArgs {
    std::uint64_t primes{1'000'000};
    int digits{30};
};

int run_constant(const ConstantArgs& args) {
    const auto est = cubicloc::c2_truncated(args.primes, args.digits);
    std::cout << json(est).dump() << "\n";
    return 0;
}

struct CompareArgs {
    std::uint64_t A{}, B{};
    std::uint64_t primes{1'000'000};
    unsigned threads{0};
};

int run_compare(const CompareArgs& args) {
    const auto tables = cubicloc::SieveTables::build(std::max(args.A, args.B));
    const auto rep =
        cubicloc::compare_to_main_term(tables, args.A, args.B, args.primes, args.threads);
    std::cout << json(rep).dump() << "\n";
    return 0;
}

struct OscDoubleArgs {
    std::uint64_t A{}, B{};
    int s{}, t{};
    bool dyadic{false};
    std::string format = "csv";
};

int run_osc_double(const OscDoubleArgs& args) {
    const auto tables = cubicloc::SieveTables::build(std::max(args.A, args.B));
    std::vector<cubicloc::OscillationSample> rows;
    std::uint64_t A = args.A, B = args.B;
    rows.push_back(cubicloc::double_oscillation(tables, A, B, args.s, args.t));
    while (args.dyadic && A / 2 >= 2 && B / 2 >= 2) {
        A /= 2;
        B /= 2;
        rows.push_back(cubicloc::double_oscillation(tables, A, B, args.s, args.t));
    }
    if (args.format == "json") {
        std::cout << json(rows).dump() << "\n";
    } else {
        std::cout << cubicloc::oscillation_csv_header(false) << "\n";
        for (const auto& r : rows) std::cout << cubicloc::oscillation_csv_row(r, false) << "\n";
    }
    return 0;
}

struct OscSingleArgs {
    std::uint64_t B{};
    int m{};
    std::int64_t d2{}, d3{};
    int residue_class{};
    bool unweighted{false};
    std::string format = "csv";
};

int run_osc_single(const OscSingleArgs& args) {
    const auto tables = cubicloc::SieveTables::build(args.B);
    const auto row = cubicloc::single_oscillation(tables, args.B, args.m, args.d2, args.d3,
                                                  args.residue_class, !args.unweighted);
    if (args.format == "json") {
        std::cout << json(row).dump() << "\n";
    } else {
        std::cout << cubicloc::oscillation_csv_header(true) << "\n";
        std::cout << cubicloc::oscillation_csv_row(row, true) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal cubic forms: everywhere-local solubility, counting, asymptotics"};
    app.require_subcommand(1);

    AdmissibleArgs adm_args;
    auto* adm = app.add_subcommand("admissible", "print or verify the mod-27 admissible table");
    adm->add_option("--verify", adm_args.verify_path, "fixture file to diff against");
    adm->add_option("--format", adm_args.format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));

    SolvableArgs sol_args;
    auto* sol = app.add_subcommand("solvable", "local solubility report for one form");
    sol->add_option("a", sol_args.a, "coefficient a")->required()->check(CLI::PositiveNumber);
    sol->add_option("b", sol_args.b, "coefficient b")->required()->check(CLI::PositiveNumber);
    sol->add_option("--prime", sol_args.prime, "verdict at this prime only")
        ->check(CLI::PositiveNumber);
    sol->add_flag("--oracle", sol_args.oracle, "decide by brute-force search");

    CountArgs count_args;
    auto* cnt = app.add_subcommand("count", "count locally soluble pairs in [1,A] x [1,B]");
    cnt->add_option("A", count_args.A, "a-range bound")->required()->check(CLI::PositiveNumber);
    cnt->add_option("B", count_args.B, "b-range bound")->required()->check(CLI::PositiveNumber);
    cnt->add_flag("--oracle", count_args.oracle, "count with the brute-force oracle");
    cnt->add_option("--threads", count_args.threads, "worker threads (0 = hardware)");

    ConstantArgs const_args;
    auto* cst = app.add_subcommand("constant", "truncated Euler product for the main-term constant");
    cst->add_option("--primes", const_args.primes, "include primes up to this bound");
    cst->add_option("--digits", const_args.digits, "reported digits (10..50)");

    CompareArgs cmp_args;
    auto* cmp = app.add_subcommand("compare", "count N(A,B) and compare with the main term");
    cmp->add_option("A", cmp_args.A, "a-range bound")->required()->check(CLI::PositiveNumber);
    cmp->add_option("B", cmp_args.B, "b-range bound")->required()->check(CLI::PositiveNumber);
    cmp->add_option("--primes", cmp_args.primes, "Euler-product truncation");
    cmp->add_option("--threads", cmp_args.threads, "worker threads (0 = hardware)");

    auto* osc = app.add_subcommand("oscillate", "character-sum cancellation measurements");
    osc->require_subcommand(1);

    OscDoubleArgs od_args;
    auto* od = osc->add_subcommand("double", "bilinear sum over d <= A, e <= B");
    od->add_option("A", od_args.A, "d-range bound")->required()->check(CLI::PositiveNumber);
    od->add_option("B", od_args.B, "e-range bound")->required()->check(CLI::PositiveNumber);
    od->add_option("s", od_args.s, "exponent on chi_d(e)")->required();
    od->add_option("t", od_args.t, "exponent on chi_e(d)")->required();
    od->add_flag("--dyadic", od_args.dyadic, "also emit halved ranges down to 2");
    od->add_option("--format", od_args.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    OscSingleArgs os_args;
    auto* osng = osc->add_subcommand("single", "linear sum over e in (B^(1/m), B]");
    osng->add_option("B", os_args.B, "e-range bound")->required()->check(CLI::PositiveNumber);
    osng->add_option("m", os_args.m, "range cut exponent (> 2)")->required();
    osng->add_option("d2", os_args.d2, "first character modulus")->required()->check(CLI::PositiveNumber);
    osng->add_option("d3", os_args.d3, "second character modulus")->required()->check(CLI::PositiveNumber);
    osng->add_option("i", os_args.residue_class, "prime residue class of e (1 or 2)")->required();
    osng->add_flag("--unweighted", os_args.unweighted, "drop the 3^{-omega(e)} weight");
    osng->add_option("--format", os_args.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return emit_error("usage", e.what());
    }

    try {
        if (adm->parsed()) return run_admissible(adm_args);
        if (sol->parsed()) return run_solvable(sol_args);
        if (cnt->parsed()) return run_count(count_args);
        if (cst->parsed()) return run_constant(const_args);
        if (cmp->parsed()) return run_compare(cmp_args);
        if (osc->parsed()) {
            if (od->parsed()) return run_osc_double(od_args);
            return run_osc_single(os_args);
        }
    } catch (const std::invalid_argument& e) {
        return emit_error("precondition", e.what());
    } catch (const std::length_error& e) {
        return emit_error("precondition", e.what());
    } catch (const std::exception& e) {
        return emit_error("internal", e.what());
    }
    return emit_error("usage", "no subcommand given");
}
