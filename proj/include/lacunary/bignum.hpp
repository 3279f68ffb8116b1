#pragma once

// Arbitrary-precision unsigned integers on base-10^9 limbs.
//
// Decimal limbs keep digit extraction, powers of ten and string round-trips
// exact and cheap, which is what the fixed-point layer on top needs. All
// operations are value-semantic; schoolbook multiplication and Knuth-style
// long division are fast enough for the digit counts used here (<= ~10^4).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lacunary {

class BigUint {
public:
    static constexpr uint32_t kBase = 1000000000u;
    static constexpr int kLimbDigits = 9;

    BigUint() = default;

    explicit BigUint(uint64_t v) {
        while (v != 0) {
            limbs_.push_back(static_cast<uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    static BigUint from_decimal(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigUint: empty decimal string");
        BigUint r;
        // consume 9-digit chunks from the most significant end
        size_t pos = 0;
        size_t head = s.size() % kLimbDigits;
        if (head == 0) head = kLimbDigits;
        while (pos < s.size()) {
            size_t n = (pos == 0) ? head : kLimbDigits;
            uint32_t chunk = 0;
            for (size_t i = 0; i < n; ++i) {
                char c = s[pos + i];
                if (c < '0' || c > '9') throw std::invalid_argument("BigUint: non-digit character");
                chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
            }
            r.shift_up_digits(n);
            r.add_small(chunk);
            pos += n;
        }
        r.trim();
        return r;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        std::string out = std::to_string(limbs_.back());
        char buf[16];
        for (size_t i = limbs_.size() - 1; i-- > 0;) {
            std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
            out += buf;
        }
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }
    size_t limb_count() const { return limbs_.size(); }
    uint32_t limb(size_t i) const { return i < limbs_.size() ? limbs_[i] : 0; }

    // number of significant decimal digits (0 has one digit)
    size_t digit_count() const {
        if (is_zero()) return 1;
        size_t n = (limbs_.size() - 1) * kLimbDigits;
        uint32_t top = limbs_.back();
        while (top != 0) { ++n; top /= 10; }
        return n;
    }

    // decimal digit at position i (0 = least significant)
    uint32_t decimal_digit(size_t i) const {
        size_t li = i / kLimbDigits;
        if (li >= limbs_.size()) return 0;
        uint32_t l = limbs_[li];
        for (size_t k = 0; k < i % kLimbDigits; ++k) l /= 10;
        return l % 10;
    }

    static int compare(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }
    friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return compare(a, b) >= 0; }

    BigUint& operator+=(const BigUint& rhs) {
        if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
        uint32_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t s = static_cast<uint64_t>(limbs_[i]) + rhs.limb(i) + carry;
            limbs_[i] = static_cast<uint32_t>(s % kBase);
            carry = static_cast<uint32_t>(s / kBase);
            if (carry == 0 && i >= rhs.limbs_.size()) break;
        }
        if (carry) limbs_.push_back(carry);
        return *this;
    }
    friend BigUint operator+(BigUint a, const BigUint& b) { a += b; return a; }

    // requires *this >= rhs
    BigUint& operator-=(const BigUint& rhs) {
        if (*this < rhs) throw std::underflow_error("BigUint: subtraction underflow");
        int64_t borrow = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            int64_t d = static_cast<int64_t>(limbs_[i]) - rhs.limb(i) - borrow;
            if (d < 0) { d += kBase; borrow = 1; } else { borrow = 0; }
            limbs_[i] = static_cast<uint32_t>(d);
            if (borrow == 0 && i >= rhs.limbs_.size()) break;
        }
        trim();
        return *this;
    }
    friend BigUint operator-(BigUint a, const BigUint& b) { a -= b; return a; }

    BigUint& add_small(uint64_t v) {
        size_t i = 0;
        while (v != 0) {
            if (i == limbs_.size()) limbs_.push_back(0);
            uint64_t s = limbs_[i] + v % kBase;
            limbs_[i] = static_cast<uint32_t>(s % kBase);
            v = v / kBase + s / kBase;
            ++i;
        }
        return *this;
    }

    // factor must be < 10^9; use operator* for larger factors
    BigUint& mul_small(uint64_t f) {
        if (f == 0 || is_zero()) { limbs_.clear(); return *this; }
        if (f >= kBase) throw std::invalid_argument("BigUint::mul_small: factor must be < 10^9");
        uint64_t carry = 0;
        for (auto& l : limbs_) {
            uint64_t p = static_cast<uint64_t>(l) * f + carry;
            l = static_cast<uint32_t>(p % kBase);
            carry = p / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<uint32_t>(carry % kBase));
            carry /= kBase;
        }
        return *this;
    }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint();
        std::vector<uint64_t> acc(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t ai = a.limbs_[i];
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                // acc slot < kBase, product < kBase^2 ~ 1e18, carry < kBase: fits u64
                uint64_t cur = acc[i + j] + ai * b.limbs_[j] + carry;
                acc[i + j] = cur % kBase;
                carry = cur / kBase;
            }
            size_t k = i + b.limbs_.size();
            while (carry != 0) {
                uint64_t cur = acc[k] + carry;
                acc[k] = cur % kBase;
                carry = cur / kBase;
                ++k;
            }
        }
        BigUint r;
        r.limbs_.assign(acc.begin(), acc.end());
        r.trim();
        return r;
    }

    // in-place divide by small d, returns remainder
    uint32_t divmod_small(uint32_t d) {
        if (d == 0) throw std::domain_error("BigUint: division by zero");
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint64_t cur = rem * kBase + limbs_[i];
            limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<uint32_t>(rem);
    }

    // exact small division (throws if a remainder is left)
    BigUint& divexact_small(uint32_t d) {
        if (divmod_small(d) != 0) throw std::logic_error("BigUint: divexact with remainder");
        return *this;
    }

    // Long division (Knuth algorithm D adapted to base 10^9).
    static std::pair<BigUint, BigUint> divmod(const BigUint& num, const BigUint& den) {
        if (den.is_zero()) throw std::domain_error("BigUint: division by zero");
        if (num < den) return {BigUint(), num};
        if (den.limbs_.size() == 1) {
            BigUint q = num;
            uint32_t r = q.divmod_small(den.limbs_[0]);
            return {q, BigUint(r)};
        }
        // normalize so the top divisor limb is >= kBase/2 (Knuth's d = B/(v1+1);
        // the limb count of v is preserved)
        uint32_t d_norm = kBase / (den.limbs_.back() + 1);
        if (d_norm == 0) d_norm = 1;
        BigUint u = num, v = den;
        if (d_norm > 1) { u.mul_small(d_norm); v.mul_small(d_norm); }
        const size_t n = v.limbs_.size();
        const size_t m = u.limbs_.size() - n;
        u.limbs_.push_back(0);
        BigUint q;
        q.limbs_.assign(m + 1, 0);
        const uint64_t vtop = v.limbs_[n - 1];
        const uint64_t vsecond = v.limbs_[n - 2];
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t top2 = static_cast<uint64_t>(u.limb(j + n)) * kBase + u.limb(j + n - 1);
            uint64_t qhat = top2 / vtop;
            uint64_t rhat = top2 % vtop;
            if (qhat >= kBase) { qhat = kBase - 1; rhat = top2 - qhat * vtop; }
            while (rhat < kBase && qhat * vsecond > rhat * kBase + u.limb(j + n - 2)) {
                --qhat;
                rhat += vtop;
            }
            // multiply-subtract: u[j .. j+n] -= qhat * v
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v.limbs_[i] + carry;
                carry = p / kBase;
                int64_t d = static_cast<int64_t>(u.limb(j + i)) - static_cast<int64_t>(p % kBase) - borrow;
                if (d < 0) { d += kBase; borrow = 1; } else { borrow = 0; }
                u.limbs_[j + i] = static_cast<uint32_t>(d);
            }
            int64_t d = static_cast<int64_t>(u.limb(j + n)) - static_cast<int64_t>(carry) - borrow;
            if (d < 0) {
                // qhat was one too large: add back
                d += kBase;
                --qhat;
                uint32_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u.limbs_[j + i]) + v.limbs_[i] + c2;
                    u.limbs_[j + i] = static_cast<uint32_t>(s % kBase);
                    c2 = static_cast<uint32_t>(s / kBase);
                }
                d += c2;
                d -= kBase;  // absorbed by final carry into u[j+n]
            }
            u.limbs_[j + n] = static_cast<uint32_t>(d);
            q.limbs_[j] = static_cast<uint32_t>(qhat);
        }
        q.trim();
        u.trim();
        if (d_norm > 1) u.divexact_small(d_norm);
        return {q, u};
    }

    friend BigUint operator/(const BigUint& a, const BigUint& b) { return divmod(a, b).first; }
    friend BigUint operator%(const BigUint& a, const BigUint& b) { return divmod(a, b).second; }

    // multiply by 10^k
    BigUint& shift_up_digits(size_t k) {
        if (is_zero() || k == 0) return *this;
        size_t whole = k / kLimbDigits, part = k % kLimbDigits;
        if (part != 0) {
            uint32_t f = 1;
            for (size_t i = 0; i < part; ++i) f *= 10;
            mul_small(f);
        }
        if (whole != 0) limbs_.insert(limbs_.begin(), whole, 0);
        return *this;
    }

    // divide by 10^k, truncating
    BigUint& shift_down_digits(size_t k) {
        size_t whole = k / kLimbDigits, part = k % kLimbDigits;
        if (whole >= limbs_.size()) { limbs_.clear(); return *this; }
        limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(whole));
        if (part != 0) {
            uint32_t f = 1;
            for (size_t i = 0; i < part; ++i) f *= 10;
            divmod_small(f);
        }
        trim();
        return *this;
    }

    // low k decimal digits (value mod 10^k)
    BigUint mod_pow10(size_t k) const {
        BigUint r;
        size_t whole = k / kLimbDigits, part = k % kLimbDigits;
        size_t keep = std::min(limbs_.size(), whole + (part ? 1 : 0));
        r.limbs_.assign(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(keep));
        if (part != 0 && whole < r.limbs_.size()) {
            uint32_t f = 1;
            for (size_t i = 0; i < part; ++i) f *= 10;
            r.limbs_[whole] %= f;
        }
        r.trim();
        return r;
    }

    static BigUint pow10(size_t k) {
        BigUint r(1);
        r.shift_up_digits(k);
        return r;
    }

    uint64_t to_u64() const {
        uint64_t v = 0;
        if (digit_count() > 19) throw std::overflow_error("BigUint: does not fit in uint64");
        for (size_t i = limbs_.size(); i-- > 0;) {
            v = v * kBase + limbs_[i];
        }
        return v;
    }

    double to_double() const {
        double v = 0;
        for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
        return v;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<uint32_t> limbs_;
};

// Correctly rounded double for num/den, via a 25-significant-digit decimal
// rendering and strtod (glibc strtod rounds correctly).
inline double ratio_to_double(const BigUint& num, const BigUint& den) {
    if (den.is_zero()) throw std::domain_error("ratio_to_double: zero denominator");
    if (num.is_zero()) return 0.0;
    // scale numerator so the quotient carries ~26 significant digits
    long mag = static_cast<long>(num.digit_count()) - static_cast<long>(den.digit_count());
    long shift = 26 - mag;
    BigUint scaled = num;
    if (shift > 0) scaled.shift_up_digits(static_cast<size_t>(shift));
    BigUint q = scaled / den;
    std::string digits = q.to_decimal();
    // value = digits * 10^{-max(shift,0)}
    long e = static_cast<long>(digits.size()) - 1 - (shift > 0 ? shift : 0);
    std::string repr(1, digits[0]);
    if (digits.size() > 1) repr += "." + digits.substr(1);
    repr += "e" + std::to_string(e);
    return std::strtod(repr.c_str(), nullptr);
}

}  // namespace lacunary
