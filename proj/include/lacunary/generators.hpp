#pragma once

// Deterministic digit-stream sources: irrational rotations in exact decimal
// fixed point, and chaotic maps (logistic, Gauss) iterated at configurable
// working precision with probability-integral transforms.
//
// Rotation digits are exact: the expansion of xi is truncated to
// N = m + guard + digits10(m) places, so the accumulated additive error
// after t <= m steps stays below 10^{-(m+guard)}, two orders inside the
// 10^{-guard} boundary window that every emitted digit is checked against.
// A value inside the window raises boundary_proximity_error instead of
// guessing the digit.
//
// The chaotic maps are precision-sensitive; the orbit runs at
// precision_digits (default 4m) and each transformed value is digitized
// with its own boundary window, escalating the transform precision before
// giving up.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lacunary/bigfixed.hpp"
#include "lacunary/constants.hpp"
#include "lacunary/digit_stream.hpp"

namespace lacunary {

struct boundary_proximity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degenerate_orbit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline uint32_t digits10_of(uint32_t m) {
    uint32_t n = 1;
    while (m >= 10) { m /= 10; ++n; }
    return n;
}

// First fractional digit of u in [0, 1), refusing values whose fractional
// digits at positions 2..check_to are all 0 or all 9 (the value then lies
// within 10^{-check_to} of a multiple of 1/10).
inline std::optional<uint32_t> first_digit_away_from_boundary(const BigFixed& u, int64_t check_to) {
    bool all0 = true, all9 = true;
    for (int64_t k = 2; k <= check_to; ++k) {
        uint32_t d = u.fractional_digit(k);
        all0 &= (d == 0);
        all9 &= (d == 9);
        if (!all0 && !all9) break;
    }
    if (all0 || all9) return std::nullopt;
    return u.fractional_digit(1);
}

}  // namespace detail

// A decimal expansion used as rotation increment or seed. `exact` marks
// terminating decimals (test rationals); embedded constants are truncations
// and keep the boundary checks on.
struct RotationSource {
    std::string text;
    bool exact = false;
};

inline RotationSource rotation_constant(std::string_view name) {
    return {std::string(constant_entry(name).text), false};
}

inline RotationSource rotation_rational(std::string_view text) { return {std::string(text), true}; }

// D_t = floor(10 * x_{t_start + t - 1}), x_t = frac(x_0 + t*xi), in exact
// decimal fixed point; base 10 by construction. With t_start = 1 the stream
// reads x_1, x_2, ...; with t_start = 0 it digitizes the visited orbit from
// its seed point (x_0, x_1, ...), the convention under which the reference
// rejection-onset curves for the embedded constants are reported.
inline DigitStream rotation_digits(const RotationSource& xi, const RotationSource& x0, uint32_t m,
                                   uint32_t guard = 40, uint32_t t_start = 1) {
    if (m < 1) throw std::invalid_argument("rotation_digits: m must be >= 1");
    if (t_start > 1) throw std::invalid_argument("rotation_digits: t_start must be 0 or 1");
    const int64_t N = static_cast<int64_t>(m) + guard + detail::digits10_of(m);
    bool xi_trunc = false, x0_trunc = false;
    BigFixed step = BigFixed::parse(xi.text, N, &xi_trunc);
    BigFixed x = BigFixed::parse(x0.text, N, &x0_trunc);
    if (!xi.exact) {
        auto dot = xi.text.find('.');
        size_t frac_len = dot == std::string::npos ? 0 : xi.text.size() - dot - 1;
        if (static_cast<int64_t>(frac_len) < N)
            throw std::invalid_argument(
                "rotation_digits: xi expansion has " + std::to_string(frac_len) +
                " fractional digits, need >= " + std::to_string(N) + " for m=" + std::to_string(m));
    }
    if (x.sign() < 0 || !(x < BigFixed(1, N)))
        throw std::invalid_argument("rotation_digits: x0 must lie in [0, 1)");
    const bool seed_exact = x0.exact && !x0_trunc;
    const bool orbit_exact = xi.exact && !xi_trunc && seed_exact;
    std::vector<uint8_t> out;
    out.reserve(m);
    auto emit = [&](const BigFixed& v, uint32_t t, bool is_exact) {
        if (is_exact) {
            out.push_back(static_cast<uint8_t>(v.fractional_digit(1)));
            return;
        }
        auto d = detail::first_digit_away_from_boundary(v, guard);
        if (!d)
            throw boundary_proximity_error("rotation_digits: x_" + std::to_string(t) +
                                           " is within 10^-" + std::to_string(guard) +
                                           " of a digit boundary");
        out.push_back(static_cast<uint8_t>(*d));
    };
    if (t_start == 0) emit(x, 0, seed_exact);
    for (uint32_t t = 1; out.size() < m; ++t) {
        x = (x + step).frac();
        emit(x, t, orbit_exact);
    }
    return DigitStream(10, std::move(out));
}

inline DigitStream rotation_digits(std::string_view constant_name, uint32_t m, uint32_t guard = 40,
                                   uint32_t t_start = 1) {
    return rotation_digits(rotation_constant(constant_name), rotation_rational("0"), m, guard, t_start);
}

struct GeneratedStream {
    DigitStream stream;
    uint32_t precision_digits = 0;  // orbit working precision actually used
};

namespace detail {

// Digitize u(T) where eval(T) recomputes the transform at scale T; the
// transform precision escalates (up to max_scale) when u sits too close to
// a digit boundary.
template <typename Eval>
uint32_t digitize_with_escalation(const Eval& eval, int64_t start_scale, int64_t max_scale,
                                  const char* what) {
    int64_t T = start_scale;
    for (;;) {
        BigFixed u = eval(T);
        auto d = first_digit_away_from_boundary(u, T - 8);
        if (d) return *d;
        if (T >= max_scale)
            throw boundary_proximity_error(std::string(what) +
                                           ": transformed value too close to a digit boundary");
        T = std::min(max_scale, 2 * T);
    }
}

}  // namespace detail

// Logistic map x' = 4x(1-x) with u = (2/pi) asin(sqrt(x)) = acos(1-2x)/pi,
// D_t = floor(10 u_t). Deterministic per (x0, precision_digits).
inline GeneratedStream logistic_digits(std::string_view x0_text, uint32_t m,
                                       uint32_t precision_digits = 0) {
    if (m < 1) throw std::invalid_argument("logistic_digits: m must be >= 1");
    if (precision_digits == 0) precision_digits = 4 * m;
    const int64_t W = std::max<int64_t>(precision_digits, 32);
    BigFixed x = BigFixed::parse(x0_text, W);
    BigFixed one(1, W);
    if (!(x > BigFixed(0, W)) || !(x < one))
        throw std::invalid_argument("logistic_digits: x0 must lie in (0, 1)");
    const int64_t T0 = 48;
    const int64_t Tmax = std::min<int64_t>(W, 256);
    std::vector<uint8_t> out;
    out.reserve(m);
    for (uint32_t t = 1; t <= m; ++t) {
        x = BigFixed::mul(x, one - x, W).mul_small(4);
        if (x.is_zero() || x >= one)
            throw degenerate_orbit_error("logistic_digits: orbit left (0,1) at step " +
                                         std::to_string(t) + " (degenerate seed)");
        uint32_t d = detail::digitize_with_escalation(
            [&](int64_t T) {
                // u = (pi/2 - sign(v) asin(|v|)) / pi with v = 1 - 2x
                const int64_t P = T + 8;
                BigFixed v = BigFixed(1, P) - x.rescaled(P).mul_small(2);
                BigFixed a = bf_asin(v.sign() < 0 ? v.negated() : v, P);
                BigFixed pi = bf_pi(P);
                BigFixed halfpi = BigFixed::from_scaled(
                    [&] {
                        BigUint mg = pi.magnitude();
                        mg.divmod_small(2);
                        return mg;
                    }(),
                    P, 1);
                BigFixed num = v.sign() < 0 ? halfpi + a : halfpi - a;
                return BigFixed::div(num, pi, T);
            },
            T0, Tmax, "logistic_digits");
        out.push_back(static_cast<uint8_t>(d));
    }
    return {DigitStream(10, std::move(out)), static_cast<uint32_t>(W)};
}

// Gauss map x' = frac(1/x) with u = log2(1 + x), D_t = floor(10 u_t).
// Division and the log transform carry 10 guard digits beyond the working
// precision. The orbit seed may name an embedded constant (its fractional
// part is used) or give decimal text.
inline GeneratedStream gauss_map_digits(std::string_view x0_text_or_constant, uint32_t m,
                                        uint32_t precision_digits = 0) {
    if (m < 1) throw std::invalid_argument("gauss_map_digits: m must be >= 1");
    if (precision_digits == 0) precision_digits = 4 * m;
    const int64_t W = std::max<int64_t>(precision_digits, 32) + 10;
    std::string text(x0_text_or_constant);
    for (const auto& e : constant_table())
        if (e.name == x0_text_or_constant) { text = std::string(e.text); break; }
    BigFixed x = BigFixed::parse(text, W).frac();
    if (x.is_zero()) throw std::invalid_argument("gauss_map_digits: x0 must have a nonzero fractional part");
    const int64_t T0 = 48;
    const int64_t Tmax = std::min<int64_t>(W, 256);
    BigFixed one(1, W);
    std::vector<uint8_t> out;
    out.reserve(m);
    for (uint32_t t = 1; t <= m; ++t) {
        x = BigFixed::div(one, x, W).frac();
        if (x.is_zero())
            throw degenerate_orbit_error("gauss_map_digits: orbit reached 0 at step " +
                                         std::to_string(t) + " (working precision exhausted)");
        uint32_t d = detail::digitize_with_escalation(
            [&](int64_t T) {
                const int64_t P = T + 8;
                BigFixed ln_arg = BigFixed(1, P) + x.rescaled(P);
                BigFixed num = bf_ln_1to2(ln_arg, P);
                return BigFixed::div(num, bf_ln2(P), T);
            },
            T0, Tmax, "gauss_map_digits");
        out.push_back(static_cast<uint8_t>(d));
    }
    return {DigitStream(10, std::move(out)), static_cast<uint32_t>(W - 10)};
}

}  // namespace lacunary
