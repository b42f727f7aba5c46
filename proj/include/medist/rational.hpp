#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace medist::lp {

/// Exact rational scalar for the solver's "rational" verification mode.
/// int64 numerator/denominator, normalized (den > 0, gcd 1); intermediate
/// products run in 128-bit and overflow throws instead of wrapping.
class Rat {
public:
    Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        normalize();
    }

    /// Parse a plain decimal literal such as "-2.063164" or "41/20".
    static Rat from_decimal(std::string_view s);

    /// Exact conversion of a finite double (every finite double is rational).
    static Rat from_double(double v);

    long long num() const { return num_; }
    long long den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rat operator-() const { return Rat(-num_, den_, unchecked{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    struct unchecked {};
    Rat(long long n, long long d, unchecked) : num_(n), den_(d) {}
    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    static Rat make(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rat: value exceeds 64-bit range");
        return Rat(static_cast<long long>(n), static_cast<long long>(d), unchecked{});
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rat Rat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty literal");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        return Rat(std::stoll(std::string(s.substr(0, slash))),
                   std::stoll(std::string(s.substr(slash + 1))));
    }
    bool neg = s.front() == '-';
    if (neg || s.front() == '+') s.remove_prefix(1);
    long long num = 0, den = 1;
    bool frac = false, any = false;
    for (char c : s) {
        if (c == '.') {
            if (frac) throw std::invalid_argument("Rat: bad decimal literal");
            frac = true;
            continue;
        }
        if (c < '0' || c > '9') throw std::invalid_argument("Rat: bad decimal literal");
        if (num > (INT64_MAX - 9) / 10) throw std::overflow_error("Rat: literal too long");
        num = num * 10 + (c - '0');
        if (frac) {
            if (den > INT64_MAX / 10) throw std::overflow_error("Rat: literal too long");
            den *= 10;
        }
        any = true;
    }
    if (!any) throw std::invalid_argument("Rat: bad decimal literal");
    return Rat(neg ? -num : num, den);
}

inline Rat Rat::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("Rat: non-finite double");
    if (v == 0.0) return Rat(0);
    int exp = 0;
    double m = std::frexp(v, &exp);           // v = m * 2^exp, |m| in [0.5, 1)
    long long num = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    if (exp >= 0) {
        if (exp > 10) throw std::overflow_error("Rat: double too large for exact conversion");
        return Rat(num << exp, 1);
    }
    if (exp < -62) {                          // denominator would overflow int64
        throw std::overflow_error("Rat: double too small for exact conversion");
    }
    return Rat(num, 1LL << (-exp));
}

}  // namespace medist::lp
