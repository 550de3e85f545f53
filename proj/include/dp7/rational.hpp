#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dp7 {

// Exact rational number on 64-bit words. Invariant: den > 0 and
// gcd(|num|, den) == 1. Arithmetic runs through 128-bit intermediates and
// throws std::overflow_error if a reduced result no longer fits; values are
// never rounded. Integer-valued operands (den == 1, the common case in the
// enumeration loops) skip the gcd reduction entirely.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n) {}
    Rat(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        *this = make(n, d);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator-(const Rat& a) { return raw(-a.num_, a.den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        if (a.den_ == 1 && b.den_ == 1) return raw(fit(i128(a.num_) + b.num_), 1);
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        if (a.num_ == 0 || b.num_ == 0) return Rat();
        if (a.den_ == 1 && b.den_ == 1) return raw(fit(i128(a.num_) * b.num_), 1);
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    using i128 = __int128;

    long long num_ = 0;
    long long den_ = 1;

    static constexpr Rat raw(long long n, long long d) {
        Rat r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    static long long fit(i128 v) {
        if (v > std::numeric_limits<long long>::max() ||
            v < std::numeric_limits<long long>::min())
            throw std::overflow_error("Rat: 64-bit overflow");
        return static_cast<long long>(v);
    }

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rat make(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rat();
        i128 g = gcd128(n, d);
        return raw(fit(n / g), fit(d / g));
    }
};

inline std::string to_string(const Rat& r) {
    if (r.is_integer()) return std::to_string(r.num());
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

// Accepts "p" or "p/q" with optional leading sign on p.
inline Rat parse_rational(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("parse_rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    auto to_ll = [&](std::string_view part) {
        if (part.empty()) bad();
        std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) bad();
        long long v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') bad();
            v = v * 10 + (part[i] - '0');
        }
        return (part[0] == '-') ? -v : v;
    };
    if (slash == std::string_view::npos) return Rat(to_ll(s));
    return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

}  // namespace dp7
