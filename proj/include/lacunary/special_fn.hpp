#pragma once

// Self-contained special functions and null-law tail probabilities.
//
// Everything here is implemented from documented series / continued
// fractions so results are bit-stable across platforms: Lanczos log-gamma,
// regularized lower incomplete gamma (series for x < a+1, Lentz continued
// fraction otherwise), chi-square tails and quantiles, the Poisson-mixture
// noncentral chi-square CDF, exact binomial tails, and the asymptotic
// Kolmogorov distribution.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lacunary/bignum.hpp"

namespace lacunary {

struct NullLaw {
    enum class Kind { chi_square, noncentral_chi_square, binomial, kolmogorov };
    Kind kind = Kind::chi_square;
    double df = 0;        // chi-square family
    double lambda = 0;    // noncentral chi-square
    int64_t n = 0;        // binomial
    double p = 0;         // binomial

    static NullLaw chi_square(double df_) { return {Kind::chi_square, df_, 0, 0, 0}; }
    static NullLaw noncentral(double df_, double lambda_) { return {Kind::noncentral_chi_square, df_, lambda_, 0, 0}; }
    static NullLaw binomial(int64_t n_, double p_) { return {Kind::binomial, 0, 0, n_, p_}; }
    static NullLaw kolmogorov() { return {Kind::kolmogorov, 0, 0, 0, 0}; }
};

// Lanczos approximation (Numerical Recipes 14-coefficient set), |err| ~ 1e-15.
inline double log_gamma(double x) {
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
        0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    if (x <= 0) throw std::domain_error("log_gamma: argument must be positive");
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

namespace detail {

inline double gamma_p_series(double a, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < 10000; ++i) {
        ++ap;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * eps)
            return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

// modified Lentz continued fraction for Q(a,x)
inline double gamma_q_cf(double a, double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) break;
    }
    return std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
}

}  // namespace detail

// Regularized lower incomplete gamma P(a, x), monotone in x, in [0, 1].
inline double reg_lower_gamma(double a, double x) {
    if (a <= 0) throw std::domain_error("reg_lower_gamma: shape must be positive");
    if (x < 0) throw std::domain_error("reg_lower_gamma: x must be >= 0");
    if (x == 0) return 0.0;
    double p = (x < a + 1.0) ? detail::gamma_p_series(a, x) : 1.0 - detail::gamma_q_cf(a, x);
    return std::min(1.0, std::max(0.0, p));
}

inline double reg_upper_gamma(double a, double x) {
    if (a <= 0) throw std::domain_error("reg_upper_gamma: shape must be positive");
    if (x < 0) throw std::domain_error("reg_upper_gamma: x must be >= 0");
    if (x == 0) return 1.0;
    double q = (x < a + 1.0) ? 1.0 - detail::gamma_p_series(a, x) : detail::gamma_q_cf(a, x);
    return std::min(1.0, std::max(0.0, q));
}

inline double chi2_cdf(double x, double df) {
    if (x <= 0) return 0.0;
    return reg_lower_gamma(df / 2.0, x / 2.0);
}

inline double chi2_sf(double x, double df) {
    if (x <= 0) return 1.0;
    return reg_upper_gamma(df / 2.0, x / 2.0);
}

// Lower quantile: x with chi2_cdf(x, df) = p, bracketing bisection.
inline double chi2_quantile(double p, double df) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("chi2_quantile: p must be in (0, 1)");
    double hi = df + 10.0 * std::sqrt(2.0 * df) + 10.0;
    while (chi2_cdf(hi, df) < p) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (chi2_cdf(mid, df) < p) lo = mid; else hi = mid;
        if (hi - lo <= 1e-13 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

// Noncentral chi-square CDF as a Poisson mixture of central CDFs,
// truncated once the remaining Poisson tail drops below 1e-13.
inline double noncentral_chi2_cdf(double x, double df, double lambda) {
    if (lambda < 0) throw std::domain_error("noncentral_chi2_cdf: lambda must be >= 0");
    if (x <= 0) return 0.0;
    if (lambda == 0) return chi2_cdf(x, df);
    const double half = lambda / 2.0;
    double weight = std::exp(-half);  // Poisson(half) pmf at k = 0
    double weight_sum = 0.0;
    double cdf = 0.0;
    for (int k = 0; k < 100000; ++k) {
        cdf += weight * chi2_cdf(x, df + 2.0 * k);
        weight_sum += weight;
        if (1.0 - weight_sum < 1e-13) break;
        weight *= half / (k + 1);
    }
    return std::min(1.0, std::max(0.0, cdf));
}

inline double noncentral_chi2_sf(double x, double df, double lambda) {
    return 1.0 - noncentral_chi2_cdf(x, df, lambda);
}

// Exact upper binomial tail P(X >= k) for X ~ Bin(n, num/den), evaluated in
// integer arithmetic and rounded once at the end. The p-value of the
// repeat-rate test uses this with num/den = 1/b.
inline double binom_sf_exact(int64_t k, int64_t n, uint32_t num, uint32_t den) {
    if (n < 0 || den == 0 || num > den) throw std::invalid_argument("binom_sf_exact: bad arguments");
    if (k <= 0) return 1.0;
    if (k > n) return 0.0;
    const uint32_t q = den - num;
    // term_j = C(n, j) * num^j * q^(n-j); accumulate j = k .. n
    BigUint choose(1);  // C(n, k) built incrementally below
    for (int64_t j = 0; j < k; ++j) {
        choose.mul_small(static_cast<uint32_t>(n - j));
        choose.divexact_small(static_cast<uint32_t>(j + 1));
    }
    BigUint pnum(1), pq(1);
    for (int64_t j = 0; j < k; ++j) pnum.mul_small(num);
    for (int64_t j = 0; j < n - k; ++j) pq.mul_small(q);
    BigUint sum;
    for (int64_t j = k; j <= n; ++j) {
        sum += choose * pnum * pq;
        if (j < n) {
            choose.mul_small(static_cast<uint32_t>(n - j));
            choose.divexact_small(static_cast<uint32_t>(j + 1));
            pnum.mul_small(num);
            pq.divexact_small(q);
        }
    }
    BigUint denom(1);
    for (int64_t j = 0; j < n; ++j) denom.mul_small(den);
    return ratio_to_double(sum, denom);
}

// General-p upper binomial tail; terms summed smallest-first for stability.
inline double binom_sf(int64_t k, int64_t n, double p) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("binom_sf: bad arguments");
    if (k <= 0) return 1.0;
    if (k > n) return 0.0;
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    std::vector<double> logs;
    logs.reserve(static_cast<size_t>(n - k + 1));
    const double lp = std::log(p), lq = std::log1p(-p);
    const double lgn = log_gamma(static_cast<double>(n) + 1.0);
    for (int64_t j = k; j <= n; ++j) {
        double lg = lgn - log_gamma(static_cast<double>(j) + 1.0) -
                    log_gamma(static_cast<double>(n - j) + 1.0) + j * lp + (n - j) * lq;
        logs.push_back(lg);
    }
    std::sort(logs.begin(), logs.end());
    double sum = 0.0;
    for (double lg : logs) sum += std::exp(lg);
    return std::min(1.0, sum);
}

// Asymptotic Kolmogorov distribution tail: 2 sum (-1)^{k-1} exp(-2 k^2 x^2),
// truncated when a term drops below 1e-14; clamped to [0, 1].
inline double kolmogorov_sf(double x) {
    if (x <= 0) return 1.0;
    double sum = 0.0;
    double sgn = 1.0;
    for (int k = 1; k < 100000; ++k) {
        double term = std::exp(-2.0 * k * k * x * x);
        if (term < 1e-14) break;
        sum += sgn * term;
        sgn = -sgn;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

}  // namespace lacunary
