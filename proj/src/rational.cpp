#include "cylf/rational.hpp"

#include <stdexcept>

namespace cylf {

void Rational::reduce() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::cmp(const Rational& a, const Rational& b) {
    return BigInt::cmp(a.num_ * b.den_, b.num_ * a.den_);
}

BigInt Rational::floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (r.sign() < 0) q = q - BigInt(1);
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor(), BigInt(1)); }

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(const std::string& s, bool strict) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (strict && s.find('.') != std::string::npos) throw std::invalid_argument("Rational: not p/q");
        return Rational(BigInt(s), BigInt(1));
    }
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    if (strict) {
        if (d.sign() <= 0) throw std::invalid_argument("Rational: denominator must be positive");
        BigInt g = BigInt::gcd(n, d);
        if (!g.is_one() && !n.is_zero()) throw std::invalid_argument("Rational: fraction not reduced");
        if (n.is_zero() && !d.is_one()) throw std::invalid_argument("Rational: zero must be 0/1");
    }
    return Rational(n, d);
}

Rational Rational::simplest_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::domain_error("simplest_between: empty interval");
    // smallest integer strictly above lo
    BigInt fl = lo.floor();
    Rational n(fl + BigInt(1), BigInt(1));
    if (lo.is_integer()) n = Rational(lo.num() + lo.den(), lo.den());  // == lo + 1
    if (n < hi) return n;
    // same integer gap: recurse on reciprocals
    Rational f(fl, BigInt(1));
    Rational a = lo - f, b = hi - f;  // 0 <= a < b <= 1, and no integer strictly inside
    if (a.is_zero()) {
        // (0, b): take 1/(floor(1/b)+1)
        Rational inv = Rational(1) / b;
        BigInt k = inv.floor();
        if (Rational(k, BigInt(1)) == inv) {
            // 1/b integral: 1/(k+1) < b works
            return f + Rational(BigInt(1), k + BigInt(1));
        }
        return f + Rational(BigInt(1), k + BigInt(1));
    }
    Rational inner = simplest_between(Rational(1) / b, Rational(1) / a);
    return f + Rational(1) / inner;
}

}  // namespace cylf
