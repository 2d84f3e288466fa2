#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cylf {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs
// (little-endian, no leading zero limbs; sign == 0 iff magnitude empty).
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    bool fits_ll() const;
    long long to_ll() const;  // asserts fits_ll()

    static int cmp(const BigInt& a, const BigInt& b);
    static int cmp_mag(const BigInt& a, const BigInt& b);

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated division (quotient rounds toward zero).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const BigInt& o) const { return cmp(*this, o) != 0; }
    bool operator<(const BigInt& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(*this, o) >= 0; }

    static BigInt gcd(BigInt a, BigInt b);  // nonnegative

    std::string str() const;

private:
    int sign_;
    std::vector<uint32_t> mag_;

    void trim();
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace cylf
