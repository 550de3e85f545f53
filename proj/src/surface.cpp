#include "dp7/surface.hpp"

namespace dp7 {

long long intersect_s(SurfaceDivisor c, SurfaceDivisor d) {
    return c.a * d.a - c.b1 * d.b1 - c.b2 * d.b2;
}

long long chi_s(SurfaceDivisor c) {
    return intersect_s(c, c - surface_canonical()) / 2 + 1;
}

ChowClass push_to_chow(SurfaceDivisor c) {
    return curve_class(Rat(c.a), Rat(c.a - c.b1 - c.b2));
}

SurfaceDivisor restrict_line_bundle(LineBundle l, long long u) {
    return {2 * l.l1 + l.l2, u, 2 * l.l1 - u};
}

std::vector<ChowClass> enumerate_line_classes() {
    std::vector<ChowClass> out;
    // h.(e1 xi^2 + e2 f^2) = 2e1 + e2 = 1 with f. and xi.-degrees >= 0
    // pins e1 to {0, 1}; the scan window is generous.
    for (long long e1 = -10; e1 <= 10; ++e1)
        for (long long e2 = -10; e2 <= 10; ++e2) {
            ChowClass c = curve_class(Rat(e1), Rat(e2));
            if (degree(chow_h() * c) != Rat(1)) continue;
            if (degree(chow_f() * c) < Rat(0)) continue;
            if (degree(chow_xi() * c) < Rat(0)) continue;
            out.push_back(c);
        }
    return out;
}

std::string to_string(SurfaceDivisor c) {
    if (c == SurfaceDivisor{}) return "0";
    std::string out;
    auto term = [&out](long long v, const char* sym) {
        if (v == 0) return;
        std::string coeff = std::to_string(v);
        if (!out.empty() && v > 0) out += "+";
        if (coeff == "1")
            out += sym;
        else if (coeff == "-1")
            out += "-", out += sym;
        else
            out += coeff, out += sym;
    };
    term(c.a, "l");
    term(-c.b1, "e1");
    term(-c.b2, "e2");
    return out;
}

}  // namespace dp7
