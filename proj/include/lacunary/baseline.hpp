#pragma once

// The three comparison tests run against the same digit stream: marginal
// Pearson chi-square, adjacent repeat rate, and a Kolmogorov-Smirnov variant
// on midpoint-embedded digits.

#include <algorithm>
#include <cmath>

#include "lacunary/harmonic.hpp"

namespace lacunary {

// Pearson chi-square on the marginal digit counts vs m/b, df = b-1.
inline TestReport pearson_digit_test(const DigitStream& ds) {
    ds.validate();
    const uint32_t b = ds.base, m = ds.precision();
    std::vector<uint32_t> counts(b, 0);
    for (uint8_t d : ds.digits) ++counts[d];
    const double expect = static_cast<double>(m) / b;
    double stat = 0.0;
    for (uint32_t d = 0; d < b; ++d) {
        const double diff = counts[d] - expect;
        stat += diff * diff / expect;
    }
    TestReport r;
    r.method = TestMethod::pearson;
    r.statistic = stat;
    r.null_law = NullLaw::chi_square(b - 1.0);
    r.p_value = chi2_sf(stat, b - 1.0);
    r.calibration = "asymptotic chi-square";
    return r;
}

// Repeat rate R = #{t >= 2 : D_t = D_{t-1}}; upper-tail exact binomial
// p-value under R ~ Bin(m-1, 1/b) (persistence alternative).
inline TestReport repeat_rate_test(const DigitStream& ds) {
    ds.validate();
    if (ds.precision() < 2) throw std::invalid_argument("repeat_rate_test: needs m >= 2");
    const uint32_t m = ds.precision();
    int64_t repeats = 0;
    for (uint32_t t = 1; t < m; ++t) repeats += (ds.digits[t] == ds.digits[t - 1]);
    TestReport r;
    r.method = TestMethod::repeat_rate;
    r.statistic = static_cast<double>(repeats);
    r.null_law = NullLaw::binomial(m - 1, 1.0 / ds.base);
    r.p_value = binom_sf_exact(repeats, m - 1, 1, ds.base);
    r.aux["repeats"] = static_cast<double>(repeats);
    r.calibration = "exact binomial upper tail";
    return r;
}

// K-S distance of the midpoint embedding (D_t + 0.5)/b from Unif(0,1),
// measured against the pre-jump empirical CDF levels:
//   D = max_i | u_(i) - (i-1)/m |.
// The p-value is the asymptotic Kolmogorov tail at sqrt(m) * D, which is
// conservative under the discreteness of the embedded points.
inline TestReport ks_digit_test(const DigitStream& ds) {
    ds.validate();
    const uint32_t b = ds.base, m = ds.precision();
    std::vector<double> u(m);
    for (uint32_t t = 0; t < m; ++t) u[t] = (ds.digits[t] + 0.5) / b;
    std::sort(u.begin(), u.end());
    double dist = 0.0;
    for (uint32_t i = 0; i < m; ++i)
        dist = std::max(dist, std::fabs(u[i] - static_cast<double>(i) / m));
    TestReport r;
    r.method = TestMethod::ks;
    r.statistic = dist;
    r.null_law = NullLaw::kolmogorov();
    r.p_value = kolmogorov_sf(std::sqrt(static_cast<double>(m)) * dist);
    r.aux["ks_distance"] = dist;
    r.calibration = "asymptotic Kolmogorov; midpoint embedding, discrete-conservative";
    return r;
}

}  // namespace lacunary
