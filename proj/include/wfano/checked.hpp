#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wfano {

using i64 = std::int64_t;

/// All integer arithmetic in the engine goes through these helpers:
/// overflow is a hard error, never a silent wrap.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

/// a^e with overflow checking; e >= 0.
inline i64 checked_pow(i64 a, int e) {
    if (e < 0) throw std::invalid_argument("checked_pow: negative exponent");
    i64 r = 1;
    while (e > 0) {
        if (e & 1) r = checked_mul(r, a);
        e >>= 1;
        if (e > 0) a = checked_mul(a, a);
    }
    return r;
}

using i128 = __int128;

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in 128-bit multiplication");
    return r;
}

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

/// Exact rational number on checked 64-bit integers, always reduced,
/// denominator positive.
class Rational {
  public:
    Rational() = default;
    Rational(i64 value) : num_(value) {}
    Rational(i64 num, i64 den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        reduce();
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator*(const Rational& o) const {
        // cross-reduce before multiplying to keep intermediates small
        i64 g1 = std::gcd(num_, o.den_), g2 = std::gcd(o.num_, den_);
        return Rational(checked_mul(num_ / g1, o.num_ / g2),
                        checked_mul(den_ / g2, o.den_ / g1));
    }
    Rational operator+(const Rational& o) const {
        i64 g = std::gcd(den_, o.den_);
        i64 l = checked_mul(den_ / g, o.den_);
        return Rational(checked_add(checked_mul(num_, o.den_ / g),
                                    checked_mul(o.num_, den_ / g)),
                        l);
    }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }

    std::string str() const {
        return is_integer() ? std::to_string(num_)
                            : std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    void reduce() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        i64 g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    i64 num_ = 0;
    i64 den_ = 1;
};

/// Binomial coefficient with overflow checking.
inline i64 binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

}  // namespace wfano
