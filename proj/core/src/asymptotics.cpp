#include "cubicloc/asymptotics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace cubicloc {

BigFloat euler_factor(std::int64_t p) {
    const BigFloat pf(p);
    const int w1 = (p % 3 == 1) ? 1 : 0;
    const BigFloat lhs = 1 + BigFloat(2) / ((w1 ? 3 : 1) * pf);
    const BigFloat rhs = pow(1 - 1 / pf, BigFloat(4) / 3);
    return lhs * rhs;
}

BigFloat gamma_two_thirds() { return boost::math::tgamma(BigFloat(2) / 3); }

BigFloat gamma_reflection_defect() {
    const BigFloat lhs = gamma_two_thirds() * boost::math::tgamma(BigFloat(1) / 3);
    const BigFloat rhs = 2 * boost::math::constants::pi<BigFloat>() / sqrt(BigFloat(3));
    return abs(lhs - rhs);
}

ConstantEstimate c2_truncated(std::uint64_t P, int precision_digits) {
    if (P < 2) throw std::invalid_argument("c2_truncated: P must be >= 2");
    if (precision_digits < kMinPrecisionDigits || precision_digits > kMaxPrecisionDigits)
        throw std::invalid_argument("c2_truncated: precision outside the working window");

    // conditional convergence: fold the factors in ascending prime order
    std::vector<std::uint8_t> composite(P + 1, 0);
    BigFloat product = 1;
    BigFloat at_half = 1;  // partial product over primes <= P/2
    const std::uint64_t half = P / 2;
    for (std::uint64_t p = 2; p <= P; ++p) {
        if (composite[p]) continue;
        if (p * p <= P)
            for (std::uint64_t m = p * p; m <= P; m += p) composite[m] = 1;
        product *= euler_factor(static_cast<std::int64_t>(p));
        if (p <= half) at_half = product;
    }

    ConstantEstimate est;
    est.truncation_bound = P;
    est.partial_product = product;
    const BigFloat g = gamma_two_thirds();
    est.gamma_factor = 1 / (g * g);
    est.c2_estimate = est.gamma_factor * est.partial_product;
    est.tail_estimate = abs(est.gamma_factor * (product - at_half));
    est.digits = precision_digits;
    return est;
}

BigFloat main_term_constant(const ConstantEstimate& est) {
    return est.c2_estimate * 7 / 15;
}

double main_term(double A, double B, double c) {
    if (A < 2 || B < 2) throw std::invalid_argument("main_term: A, B must be >= 2");
    return c * A * B / (std::cbrt(std::log(A)) * std::cbrt(std::log(B)));
}

ComparisonReport compare_to_main_term(const SieveTables& tables, std::uint64_t A, std::uint64_t B,
                                      std::uint64_t P, unsigned threads) {
    if (A < 2 || B < 2) throw std::invalid_argument("compare_to_main_term: A, B must be >= 2");
    const ConstantEstimate est = c2_truncated(P);
    const CountResult count = count_soluble_pairs(tables, A, B, CountMode::FastPath, threads);

    ComparisonReport rep;
    rep.A = A;
    rep.B = B;
    rep.P = P;
    rep.observed = count.count;
    rep.c2 = static_cast<double>(main_term_constant(est));
    rep.predicted = main_term(static_cast<double>(A), static_cast<double>(B), rep.c2);
    rep.ratio = static_cast<double>(rep.observed) / rep.predicted;
    rep.error_budget = 1.0 / std::log(static_cast<double>(A)) +
                       1.0 / std::log(static_cast<double>(B));
    rep.elapsed_seconds = count.elapsed_seconds;
    return rep;
}

std::string to_fixed_string(const BigFloat& v, int digits) {
    std::ostringstream ss;
    ss.precision(digits);
    ss << v;
    return ss.str();
}

}  // namespace cubicloc
