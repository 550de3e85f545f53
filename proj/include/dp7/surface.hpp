#pragma once

#include <string>
#include <vector>

#include "dp7/chow.hpp"
#include "dp7/cohomology.hpp"

namespace dp7 {

// Divisor class a*l - b1*e1 - b2*e2 on the degree-7 del Pezzo surface
// S = F cap H (the blow-up of P^2 at two points): l is the pullback of a
// line, e1 and e2 the exceptional lines. Intersection form: l^2 = 1,
// e_i^2 = -1, l*e_i = e_1*e_2 = 0. The sign convention on b1, b2 follows
// the hyperplane class H = 3l - e1 - e2 = (3, 1, 1).
struct SurfaceDivisor {
    long long a = 0;
    long long b1 = 0;
    long long b2 = 0;

    bool operator==(const SurfaceDivisor&) const = default;

    friend SurfaceDivisor operator+(SurfaceDivisor x, SurfaceDivisor y) {
        return {x.a + y.a, x.b1 + y.b1, x.b2 + y.b2};
    }
    friend SurfaceDivisor operator-(SurfaceDivisor x, SurfaceDivisor y) {
        return {x.a - y.a, x.b1 - y.b1, x.b2 - y.b2};
    }
};

inline SurfaceDivisor surface_hyperplane() { return {3, 1, 1}; }
inline SurfaceDivisor surface_canonical() { return {-3, -1, -1}; }  // -3l + e1 + e2

long long intersect_s(SurfaceDivisor c, SurfaceDivisor d);

// Riemann-Roch on S: chi(O_S(C)) = C.(C - K_S)/2 + 1, always an integer.
long long chi_s(SurfaceDivisor c);

// Class of the curve in A(F): l |-> xi^2 + f^2 and e_i |-> f^2.
ChowClass push_to_chow(SurfaceDivisor c);

// Restriction of O_F(l1*xi + l2*f) to S lands in
// |(2*l1 + l2)l - u*e1 - (2*l1 - u)e2| for some integer u that the ambient
// classes do not determine; the caller supplies it.
SurfaceDivisor restrict_line_bundle(LineBundle l, long long u);

// The two degree-2 classes e with h.e = 1, f.e >= 0, xi.e >= 0, i.e. the
// classes of lines on F: f^2 and xi^2 - f^2.
std::vector<ChowClass> enumerate_line_classes();

std::string to_string(SurfaceDivisor c);

}  // namespace dp7
