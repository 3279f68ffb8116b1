#pragma once

// Fixed-point decimal arithmetic with an explicit per-value scale, plus the
// elementary functions needed by the digit generators and the mantissa
// scanner (sqrt, ln, atan/asin, pi, exp).
//
// A BigFixed holds sign * mag * 10^{-scale}. Additions and subtractions are
// exact; multiplication and division truncate toward zero at the requested
// scale. The elementary functions evaluate with internal guard digits and
// truncate on return; their absolute error is below 10^{-(scale-2)}, which
// callers must budget for (the generators do their own boundary-window
// checks on top).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lacunary/bignum.hpp"

namespace lacunary {

class BigFixed {
public:
    BigFixed() = default;

    BigFixed(uint64_t v, int64_t scale) : sign_(v == 0 ? 0 : 1), scale_(scale), mag_(v) {
        mag_.shift_up_digits(static_cast<size_t>(scale));
    }

    static BigFixed from_scaled(BigUint mag, int64_t scale, int sign = 1) {
        BigFixed r;
        r.mag_ = std::move(mag);
        r.scale_ = scale;
        r.sign_ = r.mag_.is_zero() ? 0 : sign;
        return r;
    }

    // Parse "[+-]digits[.digits]" to the given scale. Extra fractional digits
    // are truncated toward zero; *truncated reports whether that happened.
    static BigFixed parse(std::string_view text, int64_t scale, bool* truncated = nullptr) {
        if (truncated) *truncated = false;
        std::string_view s = text;
        int sign = 1;
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            if (s[0] == '-') sign = -1;
            s.remove_prefix(1);
        }
        auto dot = s.find('.');
        std::string_view ip = dot == std::string_view::npos ? s : s.substr(0, dot);
        std::string_view fp = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw std::invalid_argument("BigFixed: empty number");
        for (char c : ip)
            if (c < '0' || c > '9') throw std::invalid_argument("BigFixed: bad digit in integer part");
        for (char c : fp)
            if (c < '0' || c > '9') throw std::invalid_argument("BigFixed: bad digit in fraction part");
        std::string digits(ip);
        if (fp.size() > static_cast<size_t>(scale)) {
            if (truncated) {
                for (size_t i = static_cast<size_t>(scale); i < fp.size(); ++i)
                    if (fp[i] != '0') { *truncated = true; break; }
            }
            fp = fp.substr(0, static_cast<size_t>(scale));
        }
        digits += fp;
        BigUint mag = digits.empty() ? BigUint() : BigUint::from_decimal(digits);
        mag.shift_up_digits(static_cast<size_t>(scale) - fp.size());
        return from_scaled(std::move(mag), scale, sign);
    }

    int sign() const { return sign_; }
    int64_t scale() const { return scale_; }
    const BigUint& magnitude() const { return mag_; }
    bool is_zero() const { return sign_ == 0; }

    // exact rescale up / truncating rescale down (toward zero)
    BigFixed rescaled(int64_t new_scale) const {
        BigFixed r = *this;
        if (new_scale >= scale_) {
            r.mag_.shift_up_digits(static_cast<size_t>(new_scale - scale_));
        } else {
            r.mag_.shift_down_digits(static_cast<size_t>(scale_ - new_scale));
        }
        r.scale_ = new_scale;
        if (r.mag_.is_zero()) r.sign_ = 0;
        return r;
    }

    static int compare(const BigFixed& a, const BigFixed& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int64_t s = std::max(a.scale_, b.scale_);
        int c = BigUint::compare(a.rescaled(s).mag_, b.rescaled(s).mag_);
        return a.sign_ >= 0 ? c : -c;
    }
    friend bool operator<(const BigFixed& a, const BigFixed& b) { return compare(a, b) < 0; }
    friend bool operator==(const BigFixed& a, const BigFixed& b) { return compare(a, b) == 0; }
    friend bool operator>(const BigFixed& a, const BigFixed& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigFixed& a, const BigFixed& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigFixed& a, const BigFixed& b) { return compare(a, b) >= 0; }

    friend BigFixed operator+(const BigFixed& a, const BigFixed& b) {
        int64_t s = std::max(a.scale_, b.scale_);
        BigFixed x = a.rescaled(s), y = b.rescaled(s);
        BigFixed r;
        r.scale_ = s;
        if (x.sign_ == 0) return y;
        if (y.sign_ == 0) return x;
        if (x.sign_ == y.sign_) {
            r.mag_ = x.mag_ + y.mag_;
            r.sign_ = x.sign_;
        } else {
            int c = BigUint::compare(x.mag_, y.mag_);
            if (c == 0) return r;  // zero at scale s
            if (c > 0) { r.mag_ = x.mag_ - y.mag_; r.sign_ = x.sign_; }
            else       { r.mag_ = y.mag_ - x.mag_; r.sign_ = y.sign_; }
        }
        return r;
    }
    friend BigFixed operator-(const BigFixed& a, const BigFixed& b) {
        BigFixed nb = b;
        nb.sign_ = -nb.sign_;
        return a + nb;
    }

    BigFixed negated() const {
        BigFixed r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    // truncating multiply at the target scale
    static BigFixed mul(const BigFixed& a, const BigFixed& b, int64_t scale) {
        BigFixed r;
        r.scale_ = scale;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        BigUint p = a.mag_ * b.mag_;
        int64_t have = a.scale_ + b.scale_;
        if (have >= scale) p.shift_down_digits(static_cast<size_t>(have - scale));
        else p.shift_up_digits(static_cast<size_t>(scale - have));
        r.mag_ = std::move(p);
        r.sign_ = r.mag_.is_zero() ? 0 : a.sign_ * b.sign_;
        return r;
    }

    BigFixed mul_small(uint32_t f) const {
        BigFixed r = *this;
        if (f == 0) return BigFixed::from_scaled(BigUint(), scale_, 0);
        r.mag_.mul_small(f);
        return r;
    }

    // truncating divide at the target scale (|a/b| truncated toward zero)
    static BigFixed div(const BigFixed& a, const BigFixed& b, int64_t scale) {
        if (b.sign_ == 0) throw std::domain_error("BigFixed: division by zero");
        BigFixed r;
        r.scale_ = scale;
        if (a.sign_ == 0) return r;
        // a/b = a.mag * 10^{scale + b.scale - a.scale} / b.mag, then / 10^{scale}
        BigUint num = a.mag_;
        int64_t up = scale + b.scale_ - a.scale_;
        if (up >= 0) num.shift_up_digits(static_cast<size_t>(up));
        BigUint den = b.mag_;
        if (up < 0) den.shift_up_digits(static_cast<size_t>(-up));
        r.mag_ = num / den;
        r.sign_ = r.mag_.is_zero() ? 0 : a.sign_ * b.sign_;
        return r;
    }

    // fractional part in [0,1); requires a nonnegative value
    BigFixed frac() const {
        if (sign_ < 0) throw std::domain_error("BigFixed::frac: negative value");
        BigFixed r;
        r.scale_ = scale_;
        r.mag_ = mag_.mod_pow10(static_cast<size_t>(scale_));
        r.sign_ = r.mag_.is_zero() ? 0 : 1;
        return r;
    }

    uint64_t floor_u64() const {
        if (sign_ < 0) throw std::domain_error("BigFixed::floor_u64: negative value");
        BigUint ip = mag_;
        ip.shift_down_digits(static_cast<size_t>(scale_));
        return ip.to_u64();
    }

    // k-th fractional decimal digit, k = 1 for the tenths place
    uint32_t fractional_digit(int64_t k) const {
        if (k < 1 || k > scale_) return 0;
        return mag_.decimal_digit(static_cast<size_t>(scale_ - k));
    }

    double to_double() const { return sign_ * mag_.to_double() * std::pow(10.0, -static_cast<double>(scale_)); }

    std::string to_string() const {
        std::string d = mag_.to_decimal();
        size_t s = static_cast<size_t>(scale_);
        if (d.size() <= s) d.insert(0, s - d.size() + 1, '0');
        d.insert(d.size() - s, s == 0 ? "" : ".");
        if (sign_ < 0) d.insert(0, 1, '-');
        return d;
    }

private:
    int sign_ = 0;
    int64_t scale_ = 0;
    BigUint mag_;
};

namespace detail {

// ---- scaled-integer kernels (value = integer / 10^P) ----

inline BigUint bf_pow10(size_t p) { return BigUint::pow10(p); }

// integer square root (floor)
inline BigUint isqrt(const BigUint& n) {
    if (n.is_zero()) return BigUint();
    // double seed, then integer Newton
    double nd = n.to_double();
    BigUint x;
    if (std::isfinite(nd) && nd < 9e307) {
        double r = std::sqrt(nd);
        x = BigUint::from_decimal([&] {
            char buf[340];
            std::snprintf(buf, sizeof buf, "%.0f", std::max(1.0, r));
            return std::string(buf);
        }());
    } else {
        // seed with 10^(digits/2 + 1)
        x = BigUint::pow10(n.digit_count() / 2 + 1);
    }
    BigUint prev;
    for (int it = 0; it < 200; ++it) {
        BigUint q = n / x;
        BigUint nx = q + x;
        uint32_t rem = nx.divmod_small(2);
        (void)rem;
        if (nx == x || nx == prev) break;
        prev = x;
        x = nx;
    }
    // settle to exact floor
    while (x * x > n) x -= BigUint(1);
    while ((x + BigUint(1)) * (x + BigUint(1)) <= n) x += BigUint(1);
    return x;
}

// atan(1/k) at scale P via the Gregory series with integer reciprocals
inline BigUint atan_inv_scaled(uint32_t k, size_t P) {
    BigUint term = bf_pow10(P);
    term.divmod_small(k);
    uint64_t k2 = static_cast<uint64_t>(k) * k;
    BigUint sum;
    BigUint neg;
    uint32_t den = 1;
    bool positive = true;
    while (!term.is_zero()) {
        BigUint t = term;
        t.divmod_small(den);
        if (positive) sum += t; else neg += t;
        positive = !positive;
        den += 2;
        if (k2 < BigUint::kBase) {
            term.divmod_small(static_cast<uint32_t>(k2));
        } else {
            term.divmod_small(k);
            term.divmod_small(k);
        }
    }
    return sum - neg;
}

}  // namespace detail

// pi at the given scale (Machin: pi = 16 atan(1/5) - 4 atan(1/239))
inline BigFixed bf_pi(int64_t scale) {
    size_t P = static_cast<size_t>(scale) + 10;
    BigUint a = detail::atan_inv_scaled(5, P);
    a.mul_small(16);
    BigUint b = detail::atan_inv_scaled(239, P);
    b.mul_small(4);
    BigUint pi = a - b;
    pi.shift_down_digits(10);
    return BigFixed::from_scaled(std::move(pi), scale);
}

// ln 2 = 2 atanh(1/3); ln 10 = 3 ln2 + 2 atanh(1/9)
namespace detail {
inline BigUint atanh_inv_scaled(uint32_t k, size_t P) {
    BigUint term = bf_pow10(P);
    term.divmod_small(k);
    uint64_t k2 = static_cast<uint64_t>(k) * k;
    BigUint sum;
    uint32_t den = 1;
    while (!term.is_zero()) {
        BigUint t = term;
        t.divmod_small(den);
        sum += t;
        den += 2;
        term.divmod_small(static_cast<uint32_t>(k2));
    }
    return sum;
}
}  // namespace detail

inline BigFixed bf_ln2(int64_t scale) {
    size_t P = static_cast<size_t>(scale) + 10;
    BigUint v = detail::atanh_inv_scaled(3, P);
    v.mul_small(2);
    v.shift_down_digits(10);
    return BigFixed::from_scaled(std::move(v), scale);
}

inline BigFixed bf_ln10(int64_t scale) {
    size_t P = static_cast<size_t>(scale) + 10;
    BigUint l2 = detail::atanh_inv_scaled(3, P);
    l2.mul_small(6);  // 3 * ln2 = 3 * 2 atanh(1/3)
    BigUint rest = detail::atanh_inv_scaled(9, P);
    rest.mul_small(2);
    BigUint v = l2 + rest;
    v.shift_down_digits(10);
    return BigFixed::from_scaled(std::move(v), scale);
}

// sqrt of a nonnegative value
inline BigFixed bf_sqrt(const BigFixed& x, int64_t scale) {
    if (x.sign() < 0) throw std::domain_error("bf_sqrt: negative argument");
    if (x.is_zero()) return BigFixed(0, scale);
    // floor(sqrt(mag * 10^{2*scale - xscale})) at scale
    BigUint n = x.magnitude();
    int64_t up = 2 * scale - x.scale();
    if (up >= 0) n.shift_up_digits(static_cast<size_t>(up));
    else n.shift_down_digits(static_cast<size_t>(-up));
    return BigFixed::from_scaled(detail::isqrt(n), scale);
}

// ln(x) for x in [1, 2]: 2 atanh((x-1)/(x+1)), series in the full argument
inline BigFixed bf_ln_1to2(const BigFixed& x, int64_t scale) {
    int64_t P = scale + 10;
    BigFixed one(1, P);
    BigFixed z = BigFixed::div(x - one, x + one, P);  // in [0, 1/3]
    BigFixed z2 = BigFixed::mul(z, z, P);
    BigFixed term = z, sum = z;
    uint32_t den = 3;
    while (!term.is_zero()) {
        term = BigFixed::mul(term, z2, P);
        if (term.is_zero()) break;
        BigFixed t = term;
        BigFixed td = BigFixed::from_scaled([&] {
            BigUint m = t.magnitude();
            m.divmod_small(den);
            return m;
        }(), P, t.sign());
        sum = sum + td;
        den += 2;
    }
    return sum.mul_small(2).rescaled(scale);
}

// ln(x) for x in [1, 16): factor out powers of two
inline BigFixed bf_ln(const BigFixed& x, int64_t scale) {
    int64_t P = scale + 10;
    BigFixed one(1, P);
    if (x < one) throw std::domain_error("bf_ln: argument must be >= 1");
    BigFixed y = x.rescaled(P);
    int halvings = 0;
    BigFixed two(2, P);
    while (y > two || y == two) {
        // y /= 2 exactly: multiply magnitude by 5, shift down one digit
        y = BigFixed::from_scaled([&] {
            BigUint m = y.magnitude();
            m.mul_small(5);
            m.shift_down_digits(1);
            return m;
        }(), P, 1);
        ++halvings;
        if (halvings > 64) throw std::domain_error("bf_ln: argument too large");
    }
    BigFixed r = bf_ln_1to2(y, P);
    if (halvings > 0) {
        BigFixed l2 = bf_ln2(P);
        r = r + l2.mul_small(static_cast<uint32_t>(halvings));
    }
    return r.rescaled(scale);
}

// atan(x) for x in [0, 1], via argument halving then the Taylor series
inline BigFixed bf_atan(const BigFixed& x, int64_t scale) {
    if (x.sign() < 0) throw std::domain_error("bf_atan: negative argument");
    int64_t P = scale + 12;
    BigFixed w = x.rescaled(P);
    BigFixed one(1, P);
    int halvings = 0;
    // reduce until w <= 1e-3: each halving via w <- w / (1 + sqrt(1 + w^2))
    BigFixed thresh = BigFixed::parse("0.001", P);
    while (w > thresh) {
        BigFixed w2 = BigFixed::mul(w, w, P);
        BigFixed s = bf_sqrt(one + w2, P);
        w = BigFixed::div(w, one + s, P);
        ++halvings;
        if (halvings > 60) break;
    }
    BigFixed w2 = BigFixed::mul(w, w, P);
    BigFixed term = w, sum = w;
    uint32_t den = 3;
    bool positive = false;
    while (!term.is_zero()) {
        term = BigFixed::mul(term, w2, P);
        if (term.is_zero()) break;
        BigFixed td = BigFixed::from_scaled([&] {
            BigUint m = term.magnitude();
            m.divmod_small(den);
            return m;
        }(), P, 1);
        sum = positive ? sum + td : sum - td;
        positive = !positive;
        den += 2;
    }
    for (int i = 0; i < halvings; ++i) sum = sum.mul_small(2);
    return sum.rescaled(scale);
}

// asin(x) for x in [0, 1]
inline BigFixed bf_asin(const BigFixed& x, int64_t scale) {
    if (x.sign() < 0) throw std::domain_error("bf_asin: negative argument");
    int64_t P = scale + 12;
    BigFixed one(1, P);
    if (x > one) throw std::domain_error("bf_asin: argument > 1");
    BigFixed z = x.rescaled(P);
    if (z == one) {
        BigFixed halfpi = bf_pi(P);
        return BigFixed::from_scaled([&] {
            BigUint m = halfpi.magnitude();
            m.divmod_small(2);
            return m;
        }(), P, 1).rescaled(scale);
    }
    BigFixed z2 = BigFixed::mul(z, z, P);
    BigFixed half = BigFixed::parse("0.5", P);
    if (z2 > half) {
        // asin(z) = pi/2 - asin(sqrt(1 - z^2))
        BigFixed co = bf_sqrt(one - z2, P);
        BigFixed inner = bf_asin(co, P);
        BigFixed halfpi = BigFixed::from_scaled([&] {
            BigUint m = bf_pi(P).magnitude();
            m.divmod_small(2);
            return m;
        }(), P, 1);
        return (halfpi - inner).rescaled(scale);
    }
    BigFixed denom = bf_sqrt(one - z2, P);
    BigFixed w = BigFixed::div(z, denom, P);
    return bf_atan(w, P).rescaled(scale);
}

// exp(x) for x in [0, 4): argument halving + Taylor
inline BigFixed bf_exp(const BigFixed& x, int64_t scale) {
    if (x.sign() < 0) throw std::domain_error("bf_exp: negative argument");
    int64_t P = scale + 12;
    BigFixed four(4, P);
    if (!(x < four)) throw std::domain_error("bf_exp: argument must be < 4");
    BigFixed y = x.rescaled(P);
    int halvings = 0;
    BigFixed thresh = BigFixed::parse("0.0625", P);
    while (y > thresh) {
        y = BigFixed::from_scaled([&] {
            BigUint m = y.magnitude();
            m.mul_small(5);
            m.shift_down_digits(1);
            return m;
        }(), P, y.sign());
        ++halvings;
    }
    BigFixed one(1, P);
    BigFixed term = one, sum = one;
    uint32_t k = 1;
    while (!term.is_zero()) {
        term = BigFixed::mul(term, y, P);
        term = BigFixed::from_scaled([&] {
            BigUint m = term.magnitude();
            m.divmod_small(k);
            return m;
        }(), P, term.sign());
        if (term.is_zero()) break;
        sum = sum + term;
        ++k;
    }
    for (int i = 0; i < halvings; ++i) sum = BigFixed::mul(sum, sum, P);
    return sum.rescaled(scale);
}

}  // namespace lacunary
