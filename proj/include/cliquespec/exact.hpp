#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliquespec {

// Arbitrary-precision signed integer, base 2^32 little-endian limbs.
// Bareiss elimination on the matrices we certify grows intermediate minors
// past 128 bits, so fixed-width types are not enough.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const;  // truncated toward zero
    BigInt operator%(const BigInt& rhs) const;

    bool operator==(const BigInt& rhs) const;
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(BigInt a, BigInt b);

    std::string to_string() const;
    double to_double() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Exact rational, denominator kept positive and coprime to the numerator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;
    bool operator==(const Rational& rhs) const;

    std::string to_string() const;
    double to_double() const;

private:
    BigInt num_, den_;
    void normalize();
};

using BigIntMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank over the integers (equivalently over Q) by fraction-free Bareiss
// elimination with row pivoting; the input is consumed.
int exact_rank(BigIntMatrix m);

// Clears denominators row by row, then defers to exact_rank.
int exact_rank(const RationalMatrix& m);

// Inverse of a nonsingular rational matrix by Gauss-Jordan elimination.
RationalMatrix exact_inverse(const RationalMatrix& m);

RationalMatrix rational_matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix rational_transpose(const RationalMatrix& a);

} // namespace cliquespec
