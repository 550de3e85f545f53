#include "dp7/chow.hpp"

namespace dp7 {

ChowClass chow_unit() { return {Rat(1), 0, 0, 0, 0, 0}; }
ChowClass chow_xi() { return {0, Rat(1), 0, 0, 0, 0}; }
ChowClass chow_f() { return {0, 0, Rat(1), 0, 0, 0}; }
ChowClass chow_h() { return {0, Rat(1), Rat(1), 0, 0, 0}; }
ChowClass chow_point(Rat mult) { return {0, 0, 0, 0, 0, mult}; }

ChowClass divisor_class(long long l1, long long l2) {
    return {0, Rat(l1), Rat(l2), 0, 0, 0};
}

ChowClass curve_class(Rat e1, Rat e2) { return {0, 0, 0, e1, e2, 0}; }

Rat degree(const ChowClass& a) { return a.pt; }

std::string to_string(const ChowClass& a) {
    std::string out;
    auto term = [&out](const Rat& c, const char* sym) {
        if (c.is_zero()) return;
        std::string coeff = to_string(c);
        if (!out.empty() && coeff[0] != '-') out += "+";
        if (*sym == '\0') {
            out += coeff;
        } else if (coeff == "1") {
            out += sym;
        } else if (coeff == "-1") {
            out += "-";
            out += sym;
        } else {
            out += coeff;
            out += sym;
        }
    };
    term(a.c0, "");
    term(a.xi, "xi");
    term(a.f, "f");
    term(a.xi2, "xi^2");
    term(a.f2, "f^2");
    term(a.pt, "pt");
    return out.empty() ? "0" : out;
}

}  // namespace dp7
