#include "cylf/bigint.hpp"

#include <cassert>
#include <stdexcept>

namespace cylf {

BigInt::BigInt(long long v) {
    if (v == 0) {
        sign_ = 0;
        return;
    }
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
    while (m) {
        mag_.push_back((uint32_t)(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt::BigInt(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sg = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty digits");
    BigInt acc;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * BigInt(10) + BigInt(s[i] - '0');
    }
    *this = acc;
    if (sign_ != 0) sign_ = sg;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

bool BigInt::fits_ll() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = 0;
    for (size_t i = 0; i < mag_.size(); ++i) m |= (unsigned long long)mag_[i] << (32 * i);
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
}

long long BigInt::to_ll() const {
    assert(fits_ll());
    unsigned long long m = 0;
    for (size_t i = 0; i < mag_.size(); ++i) m |= (unsigned long long)mag_[i] << (32 * i);
    return sign_ >= 0 ? (long long)m : -(long long)m;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.mag_.size() != b.mag_.size()) return a.mag_.size() < b.mag_.size() ? -1 : 1;
    for (size_t i = a.mag_.size(); i-- > 0;) {
        if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a, b);
    return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = (uint32_t)s;
        carry = s >> 32;
    }
    r[x.size()] = (uint32_t)carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
        if (d < 0) {
            d += ((int64_t)1 << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = (uint32_t)d;
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + (uint64_t)a[i] * b[j] + carry;
            r[i + j] = (uint32_t)cur;
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = (uint32_t)cur;
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

// Knuth algorithm D, normalized so the divisor's top limb has its high bit set.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    assert(!b.empty());
    q.clear();
    r.clear();
    if (a.size() < b.size() || (a.size() == b.size() && [&] {
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;  // equal -> not less
        }())) {
        r = a;
        while (!r.empty() && r.back() == 0) r.pop_back();
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = (uint32_t)(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back((uint32_t)rem);
        return;
    }
    int shift = 0;
    uint32_t top = b.back();
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    size_t n = b.size(), m = a.size() - n;
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    // shifted copies
    for (size_t i = 0; i < n; ++i) {
        v[i] = (uint32_t)((((uint64_t)b[i]) << shift) & 0xffffffffu);
        if (shift && i > 0) v[i] |= (uint32_t)((uint64_t)b[i - 1] >> (32 - shift));
    }
    for (size_t i = 0; i < a.size(); ++i) {
        u[i] = (uint32_t)((((uint64_t)a[i]) << shift) & 0xffffffffu);
        if (shift && i > 0) u[i] |= (uint32_t)((uint64_t)a[i - 1] >> (32 - shift));
    }
    if (shift) u[a.size()] = (uint32_t)((uint64_t)a[a.size() - 1] >> (32 - shift));
    q.assign(m + 1, 0);
    const uint64_t BASE = 1ULL << 32;
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = ((uint64_t)u[j + n] << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= BASE || qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= BASE) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = (int64_t)u[i + j] - (int64_t)(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += (int64_t)BASE;
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = (uint32_t)t;
        }
        int64_t t = (int64_t)u[j + n] - (int64_t)carry - borrow;
        if (t < 0) {
            // add back
            t += (int64_t)BASE;
            u[j + n] = (uint32_t)t;
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = (uint64_t)u[i + j] + v[i] + c2;
                u[i + j] = (uint32_t)s;
                c2 = s >> 32;
            }
            u[j + n] = (uint32_t)(u[j + n] + c2);
        } else {
            u[j + n] = (uint32_t)t;
        }
        q[j] = (uint32_t)qhat;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize remainder
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = (uint32_t)((uint64_t)u[i] >> shift);
        if (shift && i + 1 < u.size()) r[i] |= (uint32_t)(((uint64_t)u[i + 1] << (32 - shift)) & 0xffffffffu);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<uint32_t> m = mag_;
    while (!m.empty()) {
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = (uint32_t)(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back((char)('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

}  // namespace cylf
