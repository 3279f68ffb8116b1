#pragma once

// Finite-grid exponential-tilt alternatives: coefficient builders for the
// four perturbation models, the lacunary score H, and the coherent-drift
// noncentrality of a tilt.
//
// A tilt assigns cosine/sine coefficients theta_c[j][t], theta_s[j][t] to
// harmonic order j and digit scale t; the tilted grid distribution weights
// each grid point u by exp(m^{-1/2} H(u)) with
//   H(u) = sum_t sum_j [ theta_c cos(2 pi j b^{t-1} u) + theta_s sin(...) ].
// The normalizer over the b^m grid points is never evaluated here; the
// Gibbs sampler needs only conditional ratios where it cancels.

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lacunary/harmonic.hpp"

namespace lacunary {

enum class ModelKind { phase_shift, cyclic_phase, regime_switch, neyman_smooth };

inline const char* model_kind_name(ModelKind k) {
    switch (k) {
        case ModelKind::phase_shift: return "phase_shift";
        case ModelKind::cyclic_phase: return "cyclic_phase";
        case ModelKind::regime_switch: return "regime_switch";
        case ModelKind::neyman_smooth: return "neyman_smooth";
    }
    return "?";
}

inline ModelKind model_kind_from_name(std::string_view s) {
    if (s == "phase_shift" || s == "i") return ModelKind::phase_shift;
    if (s == "cyclic_phase" || s == "ii") return ModelKind::cyclic_phase;
    if (s == "regime_switch" || s == "iii") return ModelKind::regime_switch;
    if (s == "neyman_smooth" || s == "iv") return ModelKind::neyman_smooth;
    throw std::invalid_argument("unknown model kind '" + std::string(s) + "'");
}

struct TiltSpec {
    uint32_t base = 10;
    uint32_t precision = 0;
    std::vector<double> theta_c;  // (b-1) x m, index (j-1)*m + (t-1)
    std::vector<double> theta_s;
    std::string label;

    double tc(uint32_t j, uint32_t t) const { return theta_c[(j - 1) * precision + (t - 1)]; }
    double ts(uint32_t j, uint32_t t) const { return theta_s[(j - 1) * precision + (t - 1)]; }
    double& tc(uint32_t j, uint32_t t) { return theta_c[(j - 1) * precision + (t - 1)]; }
    double& ts(uint32_t j, uint32_t t) { return theta_s[(j - 1) * precision + (t - 1)]; }

    bool is_null() const {
        for (double v : theta_c) if (v != 0.0) return false;
        for (double v : theta_s) if (v != 0.0) return false;
        return true;
    }
    double max_abs() const {
        double m = 0;
        for (double v : theta_c) m = std::max(m, std::fabs(v));
        for (double v : theta_s) m = std::max(m, std::fabs(v));
        return m;
    }
    // orders with any nonzero coefficient; the samplers iterate only these
    std::vector<uint32_t> active_orders() const {
        std::vector<uint32_t> out;
        for (uint32_t j = 1; j < base; ++j) {
            bool live = false;
            for (uint32_t t = 1; t <= precision && !live; ++t)
                live = tc(j, t) != 0.0 || ts(j, t) != 0.0;
            if (live) out.push_back(j);
        }
        return out;
    }

    static TiltSpec zero(uint32_t b, uint32_t m, std::string label = "null") {
        TiltSpec ts;
        ts.base = b;
        ts.precision = m;
        ts.theta_c.assign(static_cast<size_t>(b - 1) * m, 0.0);
        ts.theta_s.assign(static_cast<size_t>(b - 1) * m, 0.0);
        ts.label = std::move(label);
        return ts;
    }
};

struct ModelSpec {
    ModelKind kind = ModelKind::phase_shift;
    double tau = 1.0;
    // cyclic_phase: period targets (defaults to the antipodal pair {0, b/2})
    std::vector<uint32_t> targets;
    // regime_switch: explicit path of length m (defaults to consecutive
    // blocks 0,0,1,1,...,b-1,b-1 repeated); optional additive full-cycle
    // baseline, off by default
    std::vector<uint32_t> regime_path;
    bool regime_baseline = false;
};

// Default regime path: two of each digit in order, cycled to length m.
inline std::vector<uint32_t> default_regime_path(uint32_t b, uint32_t m) {
    std::vector<uint32_t> z(m);
    for (uint32_t t = 0; t < m; ++t) z[t] = (t / 2) % b;
    return z;
}

inline TiltSpec build_tilt(const ModelSpec& ms, uint32_t b, uint32_t m) {
    if (ms.tau < 0) throw std::invalid_argument("build_tilt: tau must be >= 0");
    TiltSpec tilt = TiltSpec::zero(b, m, model_kind_name(ms.kind));
    const double a = b * ms.tau;
    auto phase_i = [&](uint32_t t) { return 2.0 * std::numbers::pi * (t - 1) / b; };
    switch (ms.kind) {
        case ModelKind::phase_shift: {
            for (uint32_t t = 1; t <= m; ++t) {
                tilt.tc(1, t) = a * std::cos(phase_i(t));
                tilt.ts(1, t) = a * std::sin(phase_i(t));
            }
            break;
        }
        case ModelKind::cyclic_phase: {
            std::vector<uint32_t> targets = ms.targets;
            if (targets.empty()) targets = {0u, b / 2};
            if (targets.empty() || targets.size() < 2)
                throw std::invalid_argument("build_tilt: cyclic model needs >= 2 targets");
            for (uint32_t r : targets)
                if (r >= b) throw std::invalid_argument("build_tilt: cyclic target out of range");
            const size_t L = targets.size();
            for (uint32_t t = 1; t <= m; ++t) {
                const double phi = 2.0 * std::numbers::pi * targets[(t - 1) % L] / b;
                tilt.tc(1, t) = a * std::cos(phi);
                tilt.ts(1, t) = a * std::sin(phi);
            }
            break;
        }
        case ModelKind::regime_switch: {
            std::vector<uint32_t> path = ms.regime_path;
            if (path.empty()) path = default_regime_path(b, m);
            if (path.size() != m)
                throw std::invalid_argument("build_tilt: regime path length must equal m");
            for (uint32_t z : path)
                if (z >= b) throw std::invalid_argument("build_tilt: regime value out of range");
            for (uint32_t t = 1; t <= m; ++t) {
                double phi = 2.0 * std::numbers::pi * path[t - 1] / b;
                if (ms.regime_baseline) phi += phase_i(t);
                tilt.tc(1, t) = a * std::cos(phi);
                tilt.ts(1, t) = a * std::sin(phi);
            }
            break;
        }
        case ModelKind::neyman_smooth: {
            // Gaussian-decay weights w_j ~ exp(-j^2), sum of squares = 1
            std::vector<double> w(b - 1);
            double ss = 0;
            for (uint32_t j = 1; j < b; ++j) {
                w[j - 1] = std::exp(-static_cast<double>(j) * j);
                ss += w[j - 1] * w[j - 1];
            }
            const double norm = 1.0 / std::sqrt(ss);
            for (uint32_t j = 1; j < b; ++j) {
                for (uint32_t t = 1; t <= m; ++t) {
                    const double phi = phase_i(t);
                    tilt.tc(j, t) = a * w[j - 1] * norm * std::cos(phi);
                    tilt.ts(j, t) = a * w[j - 1] * norm * std::sin(phi);
                }
            }
            break;
        }
    }
    return tilt;
}

// H(U) for the stream's value, evaluated with the same tail-digit phase
// reduction as the harmonic components.
inline double score_H(const TiltSpec& tilt, const DigitStream& ds) {
    if (tilt.base != ds.base || tilt.precision != ds.precision())
        throw std::invalid_argument("score_H: tilt/stream shape mismatch");
    const std::vector<double> v = tail_values(ds);
    const auto orders = tilt.active_orders();
    double h = 0;
    for (uint32_t t = 1; t <= tilt.precision; ++t) {
        for (uint32_t j : orders) {
            const double ang = 2.0 * std::numbers::pi * j * v[t - 1];
            h += tilt.tc(j, t) * std::cos(ang) + tilt.ts(j, t) * std::sin(ang);
        }
    }
    return h;
}

// lambda = (1/2) sum_j [ (mean_t theta_c)^2 + (mean_t theta_s)^2 ]
inline double theoretical_noncentrality(const TiltSpec& tilt) {
    double lambda = 0;
    for (uint32_t j = 1; j < tilt.base; ++j) {
        double mc = 0, ms = 0;
        for (uint32_t t = 1; t <= tilt.precision; ++t) {
            mc += tilt.tc(j, t);
            ms += tilt.ts(j, t);
        }
        mc /= tilt.precision;
        ms /= tilt.precision;
        lambda += mc * mc + ms * ms;
    }
    return 0.5 * lambda;
}

// ---- plain key-value (de)serialization of ModelSpec, used by the CLI ----

inline std::string model_spec_to_kv(const ModelSpec& ms) {
    std::ostringstream os;
    os << "model=" << model_kind_name(ms.kind) << "\n";
    os << "tau=" << ms.tau << "\n";
    auto join = [](const std::vector<uint32_t>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    if (!ms.targets.empty()) os << "targets=" << join(ms.targets) << "\n";
    if (!ms.regime_path.empty()) os << "regime_path=" << join(ms.regime_path) << "\n";
    if (ms.regime_baseline) os << "regime_baseline=1\n";
    return os.str();
}

inline ModelSpec model_spec_from_kv(std::string_view text) {
    ModelSpec ms;
    std::istringstream is{std::string(text)};
    std::string line;
    auto parse_list = [](const std::string& s) {
        std::vector<uint32_t> v;
        std::istringstream ls(s);
        std::string item;
        while (std::getline(ls, item, ',')) v.push_back(static_cast<uint32_t>(std::stoul(item)));
        return v;
    };
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("model spec: expected key=value, got '" + line + "'");
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "model") ms.kind = model_kind_from_name(val);
        else if (key == "tau") ms.tau = std::stod(val);
        else if (key == "targets") ms.targets = parse_list(val);
        else if (key == "regime_path") ms.regime_path = parse_list(val);
        else if (key == "regime_baseline") ms.regime_baseline = (val == "1" || val == "true");
        else throw std::invalid_argument("model spec: unknown key '" + key + "'");
    }
    return ms;
}

}  // namespace lacunary
