#include "dp7/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp7 {

long long binom2(long long m) {
    if (m < 2) return 0;
    return m * (m - 1) / 2;
}

CohomologyTable cohomology_table(LineBundle l) {
    const long long a = l.l1, b = l.l2;
    CohomologyTable t;
    for (long long j = 0; j <= a; ++j) t.h0 += binom2(a + b - j + 2);
    for (long long j = 0; j <= -a - 2; ++j) t.h1 += binom2(a + b + j + 3);
    for (long long j = 0; j <= a; ++j) t.h2 += binom2(-a - b + j - 1);
    for (long long j = 0; j <= -a - 2; ++j) t.h3 += binom2(-a - b - j - 2);
    return t;
}

bool nonvanishing(LineBundle l, int i) {
    switch (i) {
        case 0: return l.l1 >= 0 && l.l1 + l.l2 >= 0;
        case 1: return l.l1 <= -2 && l.l2 >= 1;
        case 2: return l.l1 >= 0 && l.l2 <= -3;
        case 3: return l.l1 <= -2 && l.l1 + l.l2 <= -4;
        default: throw std::invalid_argument("nonvanishing: index must be 0..3");
    }
}

LineBundle serre_dual(LineBundle l) { return {-2 - l.l1, -2 - l.l2}; }

bool is_globally_generated(LineBundle l) { return l.l1 >= 0 && l.l2 >= 0; }

bool is_initialized_line(LineBundle l) {
    return cohomology_table(l).h0 != 0 &&
           cohomology_table(l - hyperplane()).h0 == 0;
}

bool is_acm_line(LineBundle l) {
    return l.l2 - l.l1 <= 2 && l.l1 - l.l2 <= 2;
}

std::vector<LineBundle> enumerate_acm_initialized_lines(int box) {
    if (box < 5) throw std::invalid_argument("enumerate_acm_initialized_lines: box >= 5 required");
    std::vector<LineBundle> out;
    for (long long a = -box; a <= box; ++a)
        for (long long b = -box; b <= box; ++b) {
            LineBundle l{a, b};
            if (is_initialized_line(l) && is_acm_line(l)) out.push_back(l);
        }
    std::sort(out.begin(), out.end(), [](LineBundle x, LineBundle y) {
        if (x.l1 != y.l1) return x.l1 < y.l1;
        if (std::abs(x.l2) != std::abs(y.l2)) return std::abs(x.l2) < std::abs(y.l2);
        return x.l2 > y.l2;
    });
    for (const LineBundle& l : out)
        if (cohomology_table(l).h0 == 7)
            throw std::logic_error("enumerate_acm_initialized_lines: unexpected Ulrich line bundle " + to_string(l));
    return out;
}

std::string to_string(LineBundle l) {
    if (l.l1 == 0 && l.l2 == 0) return "O";
    std::string out;
    auto term = [&out](long long c, const char* sym) {
        if (c == 0) return;
        std::string coeff = std::to_string(c);
        if (!out.empty() && c > 0) out += "+";
        if (coeff == "1")
            out += sym;
        else if (coeff == "-1")
            out += "-", out += sym;
        else
            out += coeff, out += sym;
    };
    term(l.l1, "xi");
    term(l.l2, "f");
    return out;
}

}  // namespace dp7
