#pragma once

// Lacunary harmonic analysis of a single digit stream.
//
// The harmonic component of order j at scale t is the unit complex number
// exp(2*pi*i * j * b^{t-1} * U_m). Multiplying by b^{t-1} shifts the radix
// point, so the phase depends only on the tail digits D_t..D_m: we evaluate
// it from the scale-local value v_t = 0.D_t D_{t+1} ... D_m (base b), never
// from the huge integer frequency times U_m, which keeps trig arguments in
// [0, j) and loses no precision at deep scales.
//
// The statistic T = 2m * sum_j |Zbar_j|^2 aggregates the energy of the
// scale-averaged components; under uniform digits it is asymptotically
// chi-square with 2(b-1) degrees of freedom.

#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lacunary/digit_stream.hpp"
#include "lacunary/special_fn.hpp"

namespace lacunary {

enum class TestMethod { lacunary, pearson, repeat_rate, ks };

inline const char* test_method_name(TestMethod m) {
    switch (m) {
        case TestMethod::lacunary: return "lacunary";
        case TestMethod::pearson: return "pearson";
        case TestMethod::repeat_rate: return "repeat_rate";
        case TestMethod::ks: return "ks";
    }
    return "?";
}

struct TestReport {
    TestMethod method = TestMethod::lacunary;
    double statistic = 0;
    NullLaw null_law;
    double p_value = 1;
    std::map<std::string, double> aux;    // method-specific extras (R count, KS D, ...)
    std::string calibration;              // how the p-value was obtained
};

// Scale-local tail values v_t = 0.D_t ... D_m in base b, computed by the
// backward recurrence v_t = (D_t + v_{t+1}) / b. v[t-1] holds v_t.
inline std::vector<double> tail_values(const DigitStream& ds) {
    const uint32_t m = ds.precision();
    std::vector<double> v(m);
    double acc = 0.0;
    for (uint32_t t = m; t-- > 0;) {
        acc = (ds.digits[t] + acc) / ds.base;
        v[t] = acc;
    }
    return v;
}

// Z_{j,t} for one (j, t); 1 <= j <= b-1, 1 <= t <= m.
inline std::complex<double> harmonic_component(const DigitStream& ds, uint32_t j, uint32_t t) {
    if (j < 1 || j > ds.base - 1) throw std::out_of_range("harmonic_component: order j out of range");
    if (t < 1 || t > ds.precision()) throw std::out_of_range("harmonic_component: scale t out of range");
    double acc = 0.0;
    for (uint32_t r = ds.precision(); r-- > t - 1;) acc = (ds.digits[r] + acc) / ds.base;
    const double ang = 2.0 * std::numbers::pi * j * acc;
    return {std::cos(ang), std::sin(ang)};
}

struct HarmonicSummary {
    uint32_t base = 10;
    uint32_t precision = 0;
    std::vector<std::complex<double>> zbar;  // Zbar_j at index j-1
    // partial[t-1][j-1] = Zbar_j^{(t)} (running averages), present on request
    std::vector<std::vector<std::complex<double>>> partial;
    bool has_partials() const { return !partial.empty(); }
};

inline HarmonicSummary harmonic_averages(const DigitStream& ds, bool keep_partials = false) {
    ds.validate();
    const uint32_t b = ds.base, m = ds.precision();
    HarmonicSummary hs;
    hs.base = b;
    hs.precision = m;
    const std::vector<double> v = tail_values(ds);
    std::vector<std::complex<double>> running(b - 1, {0.0, 0.0});
    if (keep_partials) hs.partial.resize(m, std::vector<std::complex<double>>(b - 1));
    for (uint32_t t = 1; t <= m; ++t) {
        for (uint32_t j = 1; j < b; ++j) {
            const double ang = 2.0 * std::numbers::pi * j * v[t - 1];
            running[j - 1] += std::complex<double>(std::cos(ang), std::sin(ang));
            if (keep_partials) hs.partial[t - 1][j - 1] = running[j - 1] / static_cast<double>(t);
        }
    }
    hs.zbar.resize(b - 1);
    for (uint32_t j = 1; j < b; ++j) hs.zbar[j - 1] = running[j - 1] / static_cast<double>(m);
    return hs;
}

// T = 2m sum_j |Zbar_j|^2, in [0, 2m(b-1)].
inline double lacunary_statistic(const HarmonicSummary& hs) {
    double e = 0.0;
    for (const auto& z : hs.zbar) e += std::norm(z);
    return 2.0 * hs.precision * e;
}

// Asymptotic-in-m chi-square calibration (df = 2(b-1)).
inline TestReport lacunary_test(const DigitStream& ds) {
    HarmonicSummary hs = harmonic_averages(ds);
    TestReport r;
    r.method = TestMethod::lacunary;
    r.statistic = lacunary_statistic(hs);
    const double df = 2.0 * (ds.base - 1);
    r.null_law = NullLaw::chi_square(df);
    r.p_value = chi2_sf(r.statistic, df);
    r.calibration = "asymptotic-in-m chi-square";
    return r;
}

// Parseval reconstruction: p_hat(d) = 1/b + (1/b) sum_j Zbar_j e^{-2 pi i j d / b}.
// With partial_scale = t, the running averages Zbar_j^{(t)} are used instead.
inline std::vector<std::complex<double>> fourier_reconstruction(
    const HarmonicSummary& hs, std::optional<uint32_t> partial_scale = std::nullopt) {
    const uint32_t b = hs.base;
    std::span<const std::complex<double>> z;
    if (partial_scale) {
        if (!hs.has_partials()) throw std::logic_error("fourier_reconstruction: partials not stored");
        if (*partial_scale < 1 || *partial_scale > hs.precision)
            throw std::out_of_range("fourier_reconstruction: partial scale out of range");
        z = hs.partial[*partial_scale - 1];
    } else {
        z = hs.zbar;
    }
    std::vector<std::complex<double>> p(b);
    for (uint32_t d = 0; d < b; ++d) {
        std::complex<double> acc(1.0, 0.0);  // the j = 0 term
        for (uint32_t j = 1; j < b; ++j) {
            const double ang = -2.0 * std::numbers::pi * j * d / b;
            acc += z[j - 1] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        p[d] = acc / static_cast<double>(b);
    }
    return p;
}

// Cumulative imbalance trajectories I(t, d) = sqrt(t) * sum_{r<=t}
// |p_hat^{(r)}(d) - 1/b|, an m x b matrix. The partial reconstructions use
// running averages, so the whole matrix costs O(m b^2).
inline std::vector<std::vector<double>> cumulative_imbalance(const DigitStream& ds) {
    HarmonicSummary hs = harmonic_averages(ds, /*keep_partials=*/true);
    const uint32_t b = ds.base, m = ds.precision();
    std::vector<std::vector<double>> out(m, std::vector<double>(b, 0.0));
    std::vector<double> inner(b, 0.0);
    for (uint32_t t = 1; t <= m; ++t) {
        auto p = fourier_reconstruction(hs, t);
        for (uint32_t d = 0; d < b; ++d) {
            inner[d] += std::abs(p[d] - std::complex<double>(1.0 / b, 0.0));
            out[t - 1][d] = std::sqrt(static_cast<double>(t)) * inner[d];
        }
    }
    return out;
}

// Cross-sample digit-law diagnostics at one scale.
struct DigitLawDiagnostics {
    uint32_t base = 10;
    uint32_t scale = 1;
    std::vector<std::complex<double>> phi;    // phi_hat_j(t), j = 0..b-1
    std::vector<std::complex<double>> kappa;  // kappa_hat_j(t) = mean e^{2 pi i j R_t}, j = 0..b-1
    std::vector<uint64_t> counts;             // digit histogram at scale t
    std::vector<std::complex<double>> mean_z; // mean Z_{j,t} over the samples, j = 1..b-1
};

inline DigitLawDiagnostics digit_law_diagnostics(std::span<const DigitStream> samples, uint32_t t) {
    if (samples.empty()) throw std::invalid_argument("digit_law_diagnostics: empty sample");
    const uint32_t b = samples.front().base;
    DigitLawDiagnostics d;
    d.base = b;
    d.scale = t;
    d.counts.assign(b, 0);
    d.phi.assign(b, {0.0, 0.0});
    d.kappa.assign(b, {0.0, 0.0});
    d.mean_z.assign(b - 1, {0.0, 0.0});
    for (const auto& ds : samples) {
        if (ds.base != b || ds.precision() < t)
            throw std::invalid_argument("digit_law_diagnostics: inconsistent sample");
        ++d.counts[ds.digits[t - 1]];
        // R_t = tail value beyond scale t, scaled into [0, 1/b)
        double tail = 0.0;
        for (uint32_t r = ds.precision(); r-- > t;) tail = (ds.digits[r] + tail) / ds.base;
        const double rt = tail / b;
        const double vt = ds.digits[t - 1] / static_cast<double>(b) + rt;
        for (uint32_t j = 0; j < b; ++j) {
            const double ang = 2.0 * std::numbers::pi * j * rt;
            d.kappa[j] += std::complex<double>(std::cos(ang), std::sin(ang));
        }
        for (uint32_t j = 1; j < b; ++j) {
            const double ang = 2.0 * std::numbers::pi * j * vt;
            d.mean_z[j - 1] += std::complex<double>(std::cos(ang), std::sin(ang));
        }
    }
    const double n = static_cast<double>(samples.size());
    for (auto& k : d.kappa) k /= n;
    for (auto& z : d.mean_z) z /= n;
    for (uint32_t j = 0; j < b; ++j) {
        std::complex<double> acc(0.0, 0.0);
        for (uint32_t dig = 0; dig < b; ++dig) {
            const double ang = 2.0 * std::numbers::pi * j * dig / b;
            acc += std::complex<double>(std::cos(ang), std::sin(ang)) * (d.counts[dig] / n);
        }
        d.phi[j] = acc;
    }
    d.phi[0] = {1.0, 0.0};  // exact by construction
    return d;
}

}  // namespace lacunary
