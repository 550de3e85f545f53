#pragma once

#include <string>
#include <vector>

#include "dp7/chow.hpp"

namespace dp7 {

// The line bundle O_F(l1*xi + l2*f). Also used wherever an integral
// divisor class on F is passed around (first Chern classes, divisorial
// parts of section zero loci).
struct LineBundle {
    long long l1 = 0;
    long long l2 = 0;

    bool operator==(const LineBundle&) const = default;

    friend LineBundle operator+(LineBundle a, LineBundle b) {
        return {a.l1 + b.l1, a.l2 + b.l2};
    }
    friend LineBundle operator-(LineBundle a, LineBundle b) {
        return {a.l1 - b.l1, a.l2 - b.l2};
    }
    friend LineBundle operator-(LineBundle a) { return {-a.l1, -a.l2}; }

    ChowClass to_chow() const { return divisor_class(l1, l2); }
};

inline LineBundle hyperplane() { return {1, 1}; }

struct CohomologyTable {
    long long h0 = 0, h1 = 0, h2 = 0, h3 = 0;

    bool operator==(const CohomologyTable&) const = default;

    long long operator[](int i) const {
        switch (i) {
            case 0: return h0;
            case 1: return h1;
            case 2: return h2;
            default: return h3;
        }
    }
    long long chi() const { return h0 - h1 + h2 - h3; }
};

// m*(m-1)/2 for m >= 2, otherwise 0. This is the binomial C(m,2) with the
// empty/negative cases flattened to zero, not the polynomial m(m-1)/2
// (which would be positive again for m < 0).
long long binom2(long long m);

// All four cohomology dimensions of O_F(l1*xi + l2*f), by the closed-form
// binomial sums. Empty sums (upper limit below lower limit) contribute 0.
CohomologyTable cohomology_table(LineBundle l);

// h^i(L) != 0, decided by the closed inequality criteria (no sums).
bool nonvanishing(LineBundle l, int i);

// L |-> omega_F - L with omega_F = O_F(-2h), so (-2-l1, -2-l2).
LineBundle serre_dual(LineBundle l);

bool is_globally_generated(LineBundle l);

// h^0(L) != 0 and h^0(L - h) == 0.
bool is_initialized_line(LineBundle l);

// h^1(L + t*h) = h^2(L + t*h) = 0 for every integer t. Equivalent to
// |l1 - l2| <= 2: a twist with nonzero h^1 exists iff l2 - l1 >= 3 and one
// with nonzero h^2 exists iff l1 - l2 >= 3.
bool is_acm_line(LineBundle l);

// Scans |l1|,|l2| <= box and keeps the initialized aCM bundles. The result
// is independent of box (the criteria confine it to a fixed window); also
// certifies that none of them has h^0 = 7, i.e. there is no Ulrich line
// bundle. Requires box >= 5.
std::vector<LineBundle> enumerate_acm_initialized_lines(int box = 10);

// "O", "f", "2f", "xi", "xi-f", "2xi+3f", ...
std::string to_string(LineBundle l);

}  // namespace dp7
