#pragma once

// Digit-wise Gibbs sampler on the finite grid under an exponential tilt.
//
// State is the digit vector (D_1..D_m). One sweep updates t = 1..m in order;
// the full conditional for digit t weights candidate d by
// exp(m^{-1/2} H(u with D_t = d)). Changing D_t leaves every term of H with
// scale s >= t+1 unchanged (the phase moves by whole turns), so a candidate
// evaluation recomputes scales s <= t only and a sweep costs
// O(sum_t t * b * #active_orders) trig terms. The grid normalizer cancels in
// the conditionals and is never computed.
//
// A sampler instance is a sequential Markov chain; run independent chains
// (each with its own RngSpec stream) for parallelism.

#include <cmath>
#include <cstdint>
#include <vector>

#include "lacunary/rng.hpp"
#include "lacunary/tilt.hpp"

namespace lacunary {

struct GibbsOptions {
    uint32_t draws = 2000;
    uint32_t burn_in = 1000;
    uint32_t thin = 1;
};

class GibbsSampler {
public:
    GibbsSampler(const TiltSpec& tilt, RngSpec rng)
        : tilt_(tilt),
          orders_(tilt.active_orders()),
          rng_(rng),
          inv_sqrt_m_(1.0 / std::sqrt(static_cast<double>(tilt.precision))) {
        if (tilt_.precision < 1) throw std::invalid_argument("GibbsSampler: empty tilt");
        digits_ = uniform_digits(rng_, tilt_.base, tilt_.precision).digits;
        suffix_.resize(tilt_.precision + 1);
        scores_.resize(tilt_.base);
        weights_.resize(tilt_.base);
    }

    const std::vector<uint8_t>& digits() const { return digits_; }
    DigitStream stream() const { return DigitStream(tilt_.base, digits_); }

    void sweep() {
        const uint32_t m = tilt_.precision, b = tilt_.base;
        refresh_suffix();
        for (uint32_t t = 1; t <= m; ++t) {
            candidate_scores(t);
            // weights relative to the max score; normalizer cancels
            double mx = scores_[0];
            for (uint32_t d = 1; d < b; ++d) mx = std::max(mx, scores_[d]);
            double total = 0;
            for (uint32_t d = 0; d < b; ++d) {
                weights_[d] = std::exp(inv_sqrt_m_ * (scores_[d] - mx));
                total += weights_[d];
            }
            const double u = rng_.next_double() * total;
            double acc = 0;
            uint32_t pick = b - 1;
            for (uint32_t d = 0; d < b; ++d) {
                acc += weights_[d];
                if (u < acc) { pick = d; break; }
            }
            digits_[t - 1] = static_cast<uint8_t>(pick);
        }
    }

    // Full conditional P(D_t = d | rest) for the current state.
    std::vector<double> full_conditional(uint32_t t) {
        refresh_suffix();
        candidate_scores(t);
        const uint32_t b = tilt_.base;
        double mx = scores_[0];
        for (uint32_t d = 1; d < b; ++d) mx = std::max(mx, scores_[d]);
        std::vector<double> p(b);
        double total = 0;
        for (uint32_t d = 0; d < b; ++d) {
            p[d] = std::exp(inv_sqrt_m_ * (scores_[d] - mx));
            total += p[d];
        }
        for (double& v : p) v /= total;
        return p;
    }

    void set_digits(std::vector<uint8_t> d) {
        if (d.size() != tilt_.precision) throw std::invalid_argument("set_digits: wrong length");
        digits_ = std::move(d);
    }

private:
    // suffix_[t] = 0.D_{t+1} D_{t+2} ... D_m (tail value beyond position t);
    // valid for positions > t during a left-to-right sweep
    void refresh_suffix() {
        const uint32_t m = tilt_.precision;
        suffix_[m] = 0.0;
        for (uint32_t t = m; t-- > 0;) suffix_[t] = (digits_[t] + suffix_[t + 1]) / tilt_.base;
    }

    // scores_[d] = sum of H-terms with scale s <= t when D_t = d (terms with
    // s > t are candidate-independent and cancel in the softmax)
    void candidate_scores(uint32_t t) {
        const uint32_t b = tilt_.base;
        for (uint32_t d = 0; d < b; ++d) {
            double v = (d + suffix_[t]) / b;  // v_t with candidate digit
            double score = term_at(t, v);
            for (uint32_t s = t - 1; s >= 1; --s) {
                v = (digits_[s - 1] + v) / b;
                score += term_at(s, v);
            }
            scores_[d] = score;
        }
    }

    double term_at(uint32_t s, double v) const {
        double acc = 0;
        for (uint32_t j : orders_) {
            const double ang = 2.0 * std::numbers::pi * j * v;
            acc += tilt_.tc(j, s) * std::cos(ang) + tilt_.ts(j, s) * std::sin(ang);
        }
        return acc;
    }

    TiltSpec tilt_;
    std::vector<uint32_t> orders_;
    Xoshiro256ss rng_;
    double inv_sqrt_m_;
    std::vector<uint8_t> digits_;
    std::vector<double> suffix_;
    std::vector<double> scores_;
    std::vector<double> weights_;
};

// Run burn-in plus draws*thin sweeps, invoking on_draw after each retained
// draw with the current digit vector.
template <typename F>
void gibbs_run(const TiltSpec& tilt, const GibbsOptions& opt, RngSpec rng, F&& on_draw) {
    if (opt.draws < 1 || opt.thin < 1) throw std::invalid_argument("gibbs_run: draws and thin must be >= 1");
    GibbsSampler sampler(tilt, rng);
    for (uint32_t i = 0; i < opt.burn_in; ++i) sampler.sweep();
    for (uint32_t i = 0; i < opt.draws; ++i) {
        for (uint32_t k = 0; k < opt.thin; ++k) sampler.sweep();
        on_draw(sampler.digits());
    }
}

inline std::vector<DigitStream> gibbs_sample(const TiltSpec& tilt, const GibbsOptions& opt, RngSpec rng) {
    std::vector<DigitStream> out;
    out.reserve(opt.draws);
    gibbs_run(tilt, opt, rng,
              [&](const std::vector<uint8_t>& d) { out.emplace_back(tilt.base, d); });
    return out;
}

}  // namespace lacunary
