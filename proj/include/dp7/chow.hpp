#pragma once

#include <string>

#include "dp7/rational.hpp"

namespace dp7 {

// Element of the Chow ring Z[xi,f]/(f^3, xi^2 - xi*f) of the degree-7
// del Pezzo threefold, written in the fixed basis {1; xi, f; xi^2, f^2; pt}.
// The mixed monomial xi*f is reduced to xi^2 at multiplication time and
// xi^3 = xi^2*f = xi*f^2 = pt, f^3 = 0. Components of total degree > 3
// vanish and are silently dropped. Coefficients are exact rationals: the
// Todd class and Chern characters need denominators 2, 6, 12 and 24.
struct ChowClass {
    Rat c0, xi, f, xi2, f2, pt;

    bool operator==(const ChowClass&) const = default;

    bool is_zero() const {
        return c0.is_zero() && xi.is_zero() && f.is_zero() && xi2.is_zero() &&
               f2.is_zero() && pt.is_zero();
    }

    // Nonzero components confined to the given total degree (0..3).
    bool pure_degree(int d) const {
        if (!c0.is_zero() && d != 0) return false;
        if ((!xi.is_zero() || !f.is_zero()) && d != 1) return false;
        if ((!xi2.is_zero() || !f2.is_zero()) && d != 2) return false;
        if (!pt.is_zero() && d != 3) return false;
        return true;
    }

    friend ChowClass operator+(const ChowClass& a, const ChowClass& b) {
        return {a.c0 + b.c0, a.xi + b.xi, a.f + b.f,
                a.xi2 + b.xi2, a.f2 + b.f2, a.pt + b.pt};
    }
    friend ChowClass operator-(const ChowClass& a, const ChowClass& b) {
        return {a.c0 - b.c0, a.xi - b.xi, a.f - b.f,
                a.xi2 - b.xi2, a.f2 - b.f2, a.pt - b.pt};
    }
    friend ChowClass operator-(const ChowClass& a) {
        return {-a.c0, -a.xi, -a.f, -a.xi2, -a.f2, -a.pt};
    }
    friend ChowClass operator*(const Rat& s, const ChowClass& a) {
        return {s * a.c0, s * a.xi, s * a.f, s * a.xi2, s * a.f2, s * a.pt};
    }
    friend ChowClass operator*(const ChowClass& a, const Rat& s) { return s * a; }
    friend ChowClass operator/(const ChowClass& a, const Rat& s) {
        return {a.c0 / s, a.xi / s, a.f / s, a.xi2 / s, a.f2 / s, a.pt / s};
    }

    // Graded commutative product, reduced to the fixed basis.
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
        ChowClass r;
        r.c0 = a.c0 * b.c0;
        r.xi = a.c0 * b.xi + a.xi * b.c0;
        r.f = a.c0 * b.f + a.f * b.c0;
        // deg1*deg1: (a1*xi + a2*f)(b1*xi + b2*f) = (a1b1+a1b2+a2b1) xi^2 + a2b2 f^2
        r.xi2 = a.c0 * b.xi2 + a.xi2 * b.c0 + a.xi * b.xi + a.xi * b.f + a.f * b.xi;
        r.f2 = a.c0 * b.f2 + a.f2 * b.c0 + a.f * b.f;
        // deg1*deg2: (a1*xi + a2*f)(b1*xi^2 + b2*f^2) = (a1b1+a1b2+a2b1) pt
        r.pt = a.c0 * b.pt + a.pt * b.c0 +
               a.xi * b.xi2 + a.xi * b.f2 + a.f * b.xi2 +
               b.xi * a.xi2 + b.xi * a.f2 + b.f * a.xi2;
        return r;
    }
    ChowClass& operator+=(const ChowClass& o) { return *this = *this + o; }
    ChowClass& operator-=(const ChowClass& o) { return *this = *this - o; }
    ChowClass& operator*=(const ChowClass& o) { return *this = *this * o; }
};

ChowClass chow_unit();
ChowClass chow_xi();
ChowClass chow_f();
ChowClass chow_h();  // hyperplane class xi + f
ChowClass chow_point(Rat mult = Rat(1));
ChowClass divisor_class(long long l1, long long l2);  // l1*xi + l2*f
ChowClass curve_class(Rat e1, Rat e2);                // e1*xi^2 + e2*f^2

// Coefficient of the point class; lower-degree components are ignored.
Rat degree(const ChowClass& a);

std::string to_string(const ChowClass& a);

}  // namespace dp7
