#pragma once

#include <utility>

#include "dp7/chow.hpp"
#include "dp7/cohomology.hpp"

namespace dp7 {

// Pure degree-2 class b1*xi^2 + b2*f^2 with rational coefficients: the
// shape of every second Chern class in the classification. Rational
// entries appear while solving the linear system; integrality is a
// separate admissibility verdict.
struct CurveClass {
    Rat xi2, f2;

    bool operator==(const CurveClass&) const = default;

    ChowClass to_chow() const { return curve_class(xi2, f2); }
};

// Chern data of a bundle on F: c1 of pure degree 1, c2 of pure degree 2,
// c3 a multiple of the point class. Nothing sheaf-theoretic is attached;
// this is the numeric skeleton that Riemann-Roch consumes.
struct Rank2Data {
    int rank = 0;
    ChowClass c1, c2, c3;

    bool operator==(const Rank2Data&) const = default;
};

Rank2Data make_bundle(int rank, LineBundle c1, CurveClass c2, Rat c3 = Rat(0));

// Chern roots data of the tangent bundle: c1(T_F) = 2h and
// c2(T_F) = 6*f*xi = 6*xi^2.
struct TangentData {
    ChowClass c1 = divisor_class(2, 2);
    ChowClass c2 = curve_class(Rat(6), Rat(0));
};

// td(T_F) = 1 + c1/2 + (c1^2 + c2)/12 + c1*c2/24.
ChowClass todd_class();

// ch = rank + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3c1c2 + 3c3)/6, an element of
// A(F) tensor Q. All tensor-type operations (twist, dual, products) are
// computed in this coordinate and converted back.
ChowClass chern_character(const Rank2Data& b);
Rank2Data bundle_from_character(const ChowClass& ch);

// Euler characteristic by the closed Riemann-Roch expansion
//   rank + (c1^3 - 3c1c2 + 3c3)/6 + (c1^2 h - 2 c2 h)/2 + (4 c1 h^2 + c2(T) c1)/12.
Rat chi_rr(const Rank2Data& b);

// The same number as the degree of ch(B).td(T_F); the independent route.
Rat chi_hrr(const Rank2Data& b);

// Chern data of B tensor O_F(L) for rank-2 data, via the character
// round-trip. Rejects rank != 2.
Rank2Data twist(const Rank2Data& b, LineBundle l);

// Chern data of the dual bundle (any rank): odd character parts flip sign.
Rank2Data dual(const Rank2Data& b);

// Class of the codimension-2 part E of a section zero locus with divisorial
// part D in |d1*xi + d2*f|, i.e. c2(E(-D)) expanded in alpha, beta, delta:
//   (b1 - a1 d2 - a2 d1 - a1 d1 + 2 d1 d2 + d1^2) xi^2 + (b2 - a2 d2 + d2^2) f^2.
ChowClass zero_locus_class(LineBundle alpha, CurveClass beta, LineBundle delta);

// The three effectivity filters on a degree-2 class E: E.f >= 0,
// E.(xi - f) >= 0 and E.xi >= 0. Rejects input not of pure degree 2.
struct PositivityFilters {
    bool f_nonneg = false;
    bool xi_minus_f_nonneg = false;
    bool xi_nonneg = false;

    bool operator==(const PositivityFilters&) const = default;
    bool all() const { return f_nonneg && xi_minus_f_nonneg && xi_nonneg; }
};
PositivityFilters positivity_filters(const ChowClass& e);

// Chern data (c1, c2) of E^dual(t*h) given those of a rank-2 E, through the
// character round-trip.
struct TwistedDualData {
    LineBundle c1;
    CurveClass c2;

    bool operator==(const TwistedDualData&) const = default;
};
TwistedDualData dual_twist(LineBundle alpha, CurveClass beta, long long t);

// (c1.c2, h.c2) = ((a1 + a2) b1 + a1 b2, 2 b1 + b2).
std::pair<Rat, Rat> invariant_c1c2_hc2(LineBundle alpha, CurveClass beta);

// chi(B tensor A^dual) for rank-2 Chern data A, B (c3 = 0), computed as the
// degree of ch(B).ch(A^dual).td(T_F).
Rat end_bundle_chi(LineBundle alphaA, CurveClass betaA, LineBundle alphaB, CurveClass betaB);

// Extract the (asserted integral) degree-1 coefficient pair of c1.
LineBundle c1_coefficients(const Rank2Data& b);
CurveClass c2_coefficients(const Rank2Data& b);

}  // namespace dp7
