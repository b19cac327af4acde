#include "cliquespec/exact.hpp"

#include <algorithm>
#include <cmath>

#include "cliquespec/error.hpp"

namespace cliquespec {

// ---------------------------------------------------------------- BigInt

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long mag = v > 0 ? static_cast<unsigned long long>(v)
                                   : ~static_cast<unsigned long long>(v) + 1ULL;
    while (mag) {
        mag_.push_back(static_cast<uint32_t>(mag & 0xffffffffULL));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out[i] = static_cast<uint32_t>(s & 0xffffffffULL);
        carry = s >> 32;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(s);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        const uint64_t av = a[i];
        if (av == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + av * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw numeric_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        const uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    const int shift = __builtin_clz(b.back());
    const size_t n = b.size(), m = a.size() - n;
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    // normalized copies: u = a << shift, v = b << shift
    for (size_t i = 0; i < a.size(); ++i) {
        u[i] |= static_cast<uint32_t>((static_cast<uint64_t>(a[i]) << shift) & 0xffffffffULL);
        if (shift && i + 1 < u.size())
            u[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - shift));
    }
    for (size_t i = 0; i < n; ++i) {
        v[i] |= static_cast<uint32_t>((static_cast<uint64_t>(b[i]) << shift) & 0xffffffffULL);
        if (shift && i + 1 < n)
            v[i + 1] |= static_cast<uint32_t>(static_cast<uint64_t>(b[i]) >> (32 - shift));
    }

    q.assign(m + 1, 0);
    const uint64_t vtop = v[n - 1], vsec = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop;
        uint64_t rhat = num % vtop;
        if (qhat > 0xffffffffULL) {
            qhat = 0xffffffffULL;
            rhat = num - qhat * vtop;
        }
        while (rhat <= 0xffffffffULL && qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // multiply-subtract qhat * v from u[j..j+n]
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
            if (t < 0) {
                t += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add v back
            t += (1LL << 32);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffULL);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
            t &= 0xffffffffLL;
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize remainder
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < u.size())
            r[i] |= static_cast<uint32_t>((static_cast<uint64_t>(u[i + 1]) << (32 - shift)) & 0xffffffffULL);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (sign_ == 0) return rhs;
    if (rhs.sign_ == 0) return *this;
    BigInt out;
    if (sign_ == rhs.sign_) {
        out.sign_ = sign_;
        out.mag_ = add_mag(mag_, rhs.mag_);
    } else {
        int c = cmp_mag(mag_, rhs.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.sign_ = sign_;
            out.mag_ = sub_mag(mag_, rhs.mag_);
        } else {
            out.sign_ = rhs.sign_;
            out.mag_ = sub_mag(rhs.mag_, mag_);
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    BigInt out;
    if (sign_ == 0 || rhs.sign_ == 0) return out;
    out.sign_ = sign_ * rhs.sign_;
    out.mag_ = mul_mag(mag_, rhs.mag_);
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    if (!qm.empty()) {
        q.sign_ = a.sign_ * b.sign_;
        q.mag_ = std::move(qm);
    }
    if (!rm.empty()) {
        r.sign_ = a.sign_;
        r.mag_ = std::move(rm);
    }
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return sign_ == rhs.sign_ && mag_ == rhs.mag_;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
    int c = cmp_mag(mag_, rhs.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> mag = mag_;
    std::string digits;
    while (!mag.empty()) {
        uint64_t rem = 0;
        for (size_t i = mag.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double out = 0.0;
    for (size_t i = mag_.size(); i-- > 0;) out = out * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -out : out;
}

// -------------------------------------------------------------- Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw numeric_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const { return *this + (-rhs); }

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) throw numeric_error("Rational: division by zero");
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

bool Rational::operator==(const Rational& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

// ------------------------------------------------------ exact elimination

int exact_rank(BigIntMatrix m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    BigInt prev(1);
    int rank = 0, r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                BigInt num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                BigInt q, rem;
                BigInt::divmod(num, prev, q, rem);
                if (!rem.is_zero())
                    throw numeric_error("exact_rank: Bareiss division was not exact");
                m[i][j] = q;
            }
            m[i][c] = BigInt(0);
        }
        prev = m[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

int exact_rank(const RationalMatrix& m) {
    BigIntMatrix scaled(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        BigInt lcm(1);
        for (const Rational& v : m[i]) {
            BigInt g = BigInt::gcd(lcm, v.den());
            lcm = lcm / g * v.den();
        }
        scaled[i].reserve(m[i].size());
        for (const Rational& v : m[i])
            scaled[i].push_back(v.num() * (lcm / v.den()));
    }
    return exact_rank(std::move(scaled));
}

RationalMatrix exact_inverse(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    RationalMatrix a = m;
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (!a[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw numeric_error("exact_inverse: singular matrix");
        std::swap(a[pivot], a[c]);
        std::swap(inv[pivot], inv[c]);
        Rational p = a[c][c];
        for (int j = 0; j < n; ++j) {
            a[c][j] = a[c][j] / p;
            inv[c][j] = inv[c][j] / p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (int j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[c][j];
                inv[i][j] = inv[i][j] - f * inv[c][j];
            }
        }
    }
    return inv;
}

RationalMatrix rational_matmul(const RationalMatrix& a, const RationalMatrix& b) {
    const int r = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    const int c = k ? static_cast<int>(b[0].size()) : 0;
    RationalMatrix out(r, std::vector<Rational>(c, Rational(0)));
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (int j = 0; j < c; ++j)
                out[i][j] = out[i][j] + a[i][t] * b[t][j];
        }
    return out;
}

RationalMatrix rational_transpose(const RationalMatrix& a) {
    const int r = static_cast<int>(a.size());
    const int c = r ? static_cast<int>(a[0].size()) : 0;
    RationalMatrix out(c, std::vector<Rational>(r, Rational(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out[j][i] = a[i][j];
    return out;
}

} // namespace cliquespec
