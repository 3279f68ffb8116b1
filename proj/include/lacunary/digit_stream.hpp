#pragma once

// Base-b digit streams: the single high-precision observation.
//
// A DigitStream is the truncated expansion 0.D1 D2 ... Dm in base b. Entry
// paths are exact (decimal text, rationals); a binary-float convenience
// constructor exists but truncation near grid boundaries makes it unsuitable
// for exact work (see digits_from_double).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lacunary/bignum.hpp"

namespace lacunary {

struct DigitStream {
    uint32_t base = 10;
    std::vector<uint8_t> digits;

    DigitStream() = default;
    DigitStream(uint32_t b, std::vector<uint8_t> d) : base(b), digits(std::move(d)) {
        validate();
    }

    uint32_t precision() const { return static_cast<uint32_t>(digits.size()); }

    void validate() const {
        if (base < 2 || base > 36) throw std::invalid_argument("DigitStream: base must be in [2, 36]");
        if (digits.empty()) throw std::invalid_argument("DigitStream: needs at least one digit");
        for (uint8_t d : digits)
            if (d >= base) throw std::invalid_argument("DigitStream: digit out of range for base");
    }

    friend bool operator==(const DigitStream& a, const DigitStream& b) {
        return a.base == b.base && a.digits == b.digits;
    }
};

// Exact value of a stream: numerator over base^precision.
struct GridValue {
    BigUint numerator;
    uint32_t base = 10;
    uint32_t precision = 0;

    BigUint denominator() const {
        BigUint d(1);
        for (uint32_t i = 0; i < precision; ++i) d.mul_small(base);
        return d;
    }
    std::string to_fraction_string() const {
        return numerator.to_decimal() + "/" + denominator().to_decimal();
    }
    double to_double() const { return ratio_to_double(numerator, denominator()); }
};

// value_of: Sum_t D_t b^{-t} as an exact rational with denominator b^m.
inline GridValue value_of(const DigitStream& ds) {
    ds.validate();
    GridValue v;
    v.base = ds.base;
    v.precision = ds.precision();
    for (uint8_t d : ds.digits) {
        v.numerator.mul_small(ds.base);
        v.numerator.add_small(d);
    }
    return v;
}

// First m base-b digits (truncated, not rounded) of the exact rational
// given by decimal text "0.d1d2...". For b = 10 this is a digit read-off and
// the text must carry at least m fractional digits unless the value is
// exactly zero; for other bases the conversion runs in exact rational
// arithmetic, where padding is exact by construction.
inline DigitStream digits_from_decimal_string(std::string_view s, uint32_t b, uint32_t m) {
    if (b < 2 || b > 36) throw std::invalid_argument("digits_from_decimal_string: base must be in [2, 36]");
    if (m < 1) throw std::invalid_argument("digits_from_decimal_string: m must be >= 1");
    std::string_view t = s;
    if (!t.empty() && t[0] == '+') t.remove_prefix(1);
    auto dot = t.find('.');
    std::string_view ip = dot == std::string_view::npos ? t : t.substr(0, dot);
    std::string_view fp = dot == std::string_view::npos ? std::string_view{} : t.substr(dot + 1);
    if (ip.empty() && fp.empty())
        throw std::invalid_argument("digits_from_decimal_string: malformed text '" + std::string(s) + "'");
    for (char c : ip)
        if (c < '0' || c > '9')
            throw std::invalid_argument("digits_from_decimal_string: bad character in '" + std::string(s) + "'");
    bool int_zero = true;
    for (char c : ip) int_zero &= (c == '0');
    if (!int_zero)
        throw std::invalid_argument("digits_from_decimal_string: value must lie in [0, 1)");
    for (char c : fp)
        if (c < '0' || c > '9')
            throw std::invalid_argument("digits_from_decimal_string: bad character in '" + std::string(s) + "'");

    if (b == 10) {
        bool all_zero = true;
        for (char c : fp) all_zero &= (c == '0');
        if (fp.size() < m && !all_zero)
            throw std::invalid_argument(
                "digits_from_decimal_string: only " + std::to_string(fp.size()) +
                " fractional digits given, m=" + std::to_string(m) +
                " requires exact truncation (pad zeros explicitly if the value is exact)");
        std::vector<uint8_t> d(m, 0);
        for (uint32_t i = 0; i < m && i < fp.size(); ++i) d[i] = static_cast<uint8_t>(fp[i] - '0');
        return DigitStream(b, std::move(d));
    }

    // exact rational: value = N / 10^K; peel base-b digits by repeated multiply
    BigUint num = fp.empty() ? BigUint() : BigUint::from_decimal(std::string(fp));
    size_t K = fp.size();
    std::vector<uint8_t> d;
    d.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        num.mul_small(b);
        BigUint ipart = num;
        ipart.shift_down_digits(K);
        uint64_t dig = ipart.to_u64();
        num = num.mod_pow10(K);
        d.push_back(static_cast<uint8_t>(dig));
    }
    return DigitStream(b, std::move(d));
}

// Convenience entry from a binary double. The double's own rounding means
// values near grid boundaries can truncate to a neighboring cell; prefer the
// exact text path when digits must be reproducible.
inline DigitStream digits_from_double(double x, uint32_t b, uint32_t m) {
    if (!(x >= 0.0) || x >= 1.0) throw std::invalid_argument("digits_from_double: value must lie in [0, 1)");
    std::vector<uint8_t> d;
    d.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        x *= b;
        double ip = std::floor(x);
        if (ip >= b) ip = b - 1;
        d.push_back(static_cast<uint8_t>(ip));
        x -= ip;
    }
    return DigitStream(b, std::move(d));
}

// Parse a compact digit string like "0419" (base <= 10) or with letters for
// larger bases; used by the CLI --digits entry.
inline DigitStream digits_from_digit_text(std::string_view s, uint32_t b) {
    std::vector<uint8_t> d;
    d.reserve(s.size());
    for (char c : s) {
        uint8_t v;
        if (c >= '0' && c <= '9') v = static_cast<uint8_t>(c - '0');
        else if (c >= 'a' && c <= 'z') v = static_cast<uint8_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'Z') v = static_cast<uint8_t>(c - 'A' + 10);
        else throw std::invalid_argument(std::string("digit text: bad character '") + c + "'");
        if (v >= b) throw std::invalid_argument(std::string("digit text: digit '") + c + "' out of range for base");
        d.push_back(v);
    }
    return DigitStream(b, std::move(d));
}

}  // namespace lacunary
