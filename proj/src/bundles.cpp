#include "dp7/bundles.hpp"

#include <stdexcept>

namespace dp7 {

namespace {

ChowClass degree1_part(const ChowClass& a) { return {0, a.xi, a.f, 0, 0, 0}; }
ChowClass degree2_part(const ChowClass& a) { return {0, 0, 0, a.xi2, a.f2, 0}; }
ChowClass degree3_part(const ChowClass& a) { return {0, 0, 0, 0, 0, a.pt}; }

void require_chern_shape(const Rank2Data& b, const char* who) {
    if (!b.c1.pure_degree(1) || !b.c2.pure_degree(2) || !b.c3.pure_degree(3))
        throw std::invalid_argument(std::string(who) + ": c1, c2, c3 must have pure degrees 1, 2, 3");
}

long long integral(const Rat& r, const char* who) {
    if (!r.is_integer())
        throw std::logic_error(std::string(who) + ": expected integer, got " + to_string(r));
    return r.num();
}

}  // namespace

Rank2Data make_bundle(int rank, LineBundle c1, CurveClass c2, Rat c3) {
    return {rank, c1.to_chow(), c2.to_chow(), chow_point(c3)};
}

ChowClass todd_class() {
    TangentData t;
    return chow_unit() + t.c1 / Rat(2) + (t.c1 * t.c1 + t.c2) / Rat(12) +
           (t.c1 * t.c2) / Rat(24);
}

ChowClass chern_character(const Rank2Data& b) {
    require_chern_shape(b, "chern_character");
    ChowClass ch = {Rat(b.rank), 0, 0, 0, 0, 0};
    ch += b.c1;
    ch += (b.c1 * b.c1 - Rat(2) * b.c2) / Rat(2);
    ch += (b.c1 * b.c1 * b.c1 - Rat(3) * (b.c1 * b.c2) + Rat(3) * b.c3) / Rat(6);
    return ch;
}

Rank2Data bundle_from_character(const ChowClass& ch) {
    Rank2Data b;
    b.rank = static_cast<int>(integral(ch.c0, "bundle_from_character"));
    b.c1 = degree1_part(ch);
    ChowClass ch2 = degree2_part(ch);
    ChowClass ch3 = degree3_part(ch);
    b.c2 = (b.c1 * b.c1 - Rat(2) * ch2) / Rat(2);
    b.c3 = (Rat(6) * ch3 - b.c1 * b.c1 * b.c1 + Rat(3) * (b.c1 * b.c2)) / Rat(3);
    return b;
}

Rat chi_rr(const Rank2Data& b) {
    require_chern_shape(b, "chi_rr");
    TangentData t;
    const ChowClass h = chow_h();
    Rat r = Rat(b.rank);
    r += degree(b.c1 * b.c1 * b.c1 - Rat(3) * (b.c1 * b.c2) + Rat(3) * b.c3) / Rat(6);
    r += degree(b.c1 * b.c1 * h - Rat(2) * (b.c2 * h)) / Rat(2);
    r += degree(Rat(4) * (b.c1 * h * h) + t.c2 * b.c1) / Rat(12);
    return r;
}

Rat chi_hrr(const Rank2Data& b) {
    return degree(chern_character(b) * todd_class());
}

Rank2Data twist(const Rank2Data& b, LineBundle l) {
    if (b.rank != 2) throw std::invalid_argument("twist: rank-2 data required");
    require_chern_shape(b, "twist");
    ChowClass d = l.to_chow();
    ChowClass exp_l = chow_unit() + d + (d * d) / Rat(2) + (d * d * d) / Rat(6);
    return bundle_from_character(chern_character(b) * exp_l);
}

Rank2Data dual(const Rank2Data& b) {
    ChowClass ch = chern_character(b);
    ch.xi = -ch.xi;
    ch.f = -ch.f;
    ch.pt = -ch.pt;
    return bundle_from_character(ch);
}

ChowClass zero_locus_class(LineBundle alpha, CurveClass beta, LineBundle delta) {
    const Rat a1(alpha.l1), a2(alpha.l2), d1(delta.l1), d2(delta.l2);
    Rat e1 = beta.xi2 - a1 * d2 - a2 * d1 - a1 * d1 + Rat(2) * d1 * d2 + d1 * d1;
    Rat e2 = beta.f2 - a2 * d2 + d2 * d2;
    return curve_class(e1, e2);
}

PositivityFilters positivity_filters(const ChowClass& e) {
    if (!e.pure_degree(2))
        throw std::invalid_argument("positivity_filters: degree-2 class required, got " + to_string(e));
    return {degree(chow_f() * e) >= Rat(0),
            degree((chow_xi() - chow_f()) * e) >= Rat(0),
            degree(chow_xi() * e) >= Rat(0)};
}

TwistedDualData dual_twist(LineBundle alpha, CurveClass beta, long long t) {
    Rank2Data b = twist(dual(make_bundle(2, alpha, beta)), LineBundle{t, t});
    return {c1_coefficients(b), c2_coefficients(b)};
}

std::pair<Rat, Rat> invariant_c1c2_hc2(LineBundle alpha, CurveClass beta) {
    const Rat a1(alpha.l1), a2(alpha.l2);
    return {(a1 + a2) * beta.xi2 + a1 * beta.f2, Rat(2) * beta.xi2 + beta.f2};
}

Rat end_bundle_chi(LineBundle alphaA, CurveClass betaA, LineBundle alphaB, CurveClass betaB) {
    ChowClass ch_b = chern_character(make_bundle(2, alphaB, betaB));
    ChowClass ch_a_dual = chern_character(dual(make_bundle(2, alphaA, betaA)));
    return degree(ch_b * ch_a_dual * todd_class());
}

LineBundle c1_coefficients(const Rank2Data& b) {
    return {integral(b.c1.xi, "c1_coefficients"), integral(b.c1.f, "c1_coefficients")};
}

CurveClass c2_coefficients(const Rank2Data& b) { return {b.c2.xi2, b.c2.f2}; }

}  // namespace dp7
