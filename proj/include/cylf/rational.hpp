#pragma once

#include <string>

#include "cylf/bigint.hpp"

namespace cylf {

// Exact rational number, always stored reduced with positive denominator.
// Angular data throughout the library is held in these; there is no floating
// point anywhere on a geometric code path.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    static int cmp(const Rational& a, const Rational& b);
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(*this, o) >= 0; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    BigInt floor() const;
    // value - floor(value), in [0,1)
    Rational frac() const;

    std::string str() const;  // "p/q", q >= 1, reduced

    // Parses "p/q" or a bare integer "p". When `strict`, rejects q <= 0 and
    // non-reduced fractions instead of normalizing them.
    static Rational parse(const std::string& s, bool strict = false);

    // Simplest rational strictly inside the open interval (lo, hi)
    // (Stern-Brocot descent; minimizes the denominator).
    static Rational simplest_between(const Rational& lo, const Rational& hi);

private:
    BigInt num_, den_;
    void reduce();
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace cylf
