#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dp7/bundles.hpp"

namespace dp7 {

// Section counts h^0(E^dual(-h)) and h^0(E^dual) entering the right-hand
// sides of the c1.c2 / h.c2 relations. For a section zero locus with
// divisorial part D: both vanish when D != c1, and they are (0, 1) when
// D = c1.
struct SectionData {
    long long h0_dual_minus_h = 0;
    long long h0_dual = 0;

    static SectionData for_divisorial_part(bool d_equals_c1) {
        return d_equals_c1 ? SectionData{0, 1} : SectionData{0, 0};
    }
};

struct BetaUnique {
    CurveClass beta;
    bool operator==(const BetaUnique&) const = default;
};
// Solutions (b, hc2 - 2b) with b free.
struct BetaFamily {
    Rat hc2;
    bool operator==(const BetaFamily&) const = default;
};
struct BetaNone {
    bool operator==(const BetaNone&) const = default;
};
using BetaSolution = std::variant<BetaUnique, BetaFamily, BetaNone>;

// Right-hand sides (c1.c2, h.c2) of the system for (beta1, beta2):
//   c1.c2 = 2 h^0(E^v(-h)) + (a1^3 + 3 a1^2 a2 + 3 a1 a2^2 - a1)/3
//   h.c2  = h^0(E^v(-h)) - h^0(E^v) + (2 a1^2 + 4 a1 a2 + a2^2 - 4 a1 - 3 a2 + 4)/2
std::pair<Rat, Rat> beta_system_rhs(LineBundle alpha, SectionData s);

// Exact solution of (a1+a2) b1 + a1 b2 = rhs1, 2 b1 + b2 = rhs2. The
// determinant is a2 - a1: nonzero gives the unique pair, zero gives a
// one-parameter family when consistent and no solution otherwise. All
// three outcomes are ordinary values.
BetaSolution solve_beta(LineBundle alpha, SectionData s);

enum class Verdict {
    ruled_out_nonintegral,
    ruled_out_positivity,
    ruled_out_dual,
    split_bundle,
    realized,
};
std::string to_string(Verdict v);

struct ClassificationRow {
    std::string name;  // "A0".."A9" in table B, empty in table A
    LineBundle alpha;
    bool d_equals_c1 = false;
    BetaSolution beta;
    Verdict verdict = Verdict::realized;
    std::string reason;
};

// The eight admissible nonzero divisorial parts of a section zero locus:
// f, 2f, 3f, 4f, xi, xi-f, 2xi-f, 2xi-2f.
std::vector<LineBundle> divisor_candidates();

// Candidates D (optionally including 0) with c1 - D still effective.
std::vector<LineBundle> admissible_divisorial_parts(LineBundle alpha, bool include_zero);

// The 13-row table over 1 <= a1 <= 4, -a1 <= a2 <= -1: one D != c1 row per
// pair plus a D = c1 row whenever c1 itself is a divisor candidate.
std::vector<ClassificationRow> table_a();

// The 10-row table A0..A9 over (a1, a2) in [0,2]^2 minus {(0,0), (2,2)}:
// D != c1 rows in increasing degree c1.h^2, then the D = c1 rows.
std::vector<ClassificationRow> table_b();

// Integer solutions of 2 b1 + b2 = 9 with b2 >= 0 and b1 >= 3: the second
// Chern classes (3,3) and (4,1) available to a bundle with c1 = 2h.
std::vector<std::pair<long long, long long>> ulrich_c2_enumeration();

// The unique (a1, a2) in [0,4]^2 with 14 - 4 a1 - 3 a2 = 0, namely (2,2).
LineBundle ulrich_c1_solve();

// Delta(lambda2) = 2 C(lambda2,2) - C(lambda2-1,2) - C(lambda2-2,2) for
// lambda2 >= 2 (rejected below that); the defect whose bound <= 2 pins
// lambda2 = 2 in the effectiveness argument.
long long effectiveness_defect(long long lambda2);

// The six terminal cases of the rank-2 classification. Zero-locus degrees
// are recomputed from the Chern data, never stored.
struct FinalCase {
    LineBundle c1;
    CurveClass c2;
    std::string tag;  // "line", "quintic", "elliptic"
};
std::vector<FinalCase> final_classification();
Rat final_case_degree(const FinalCase& c);

// Integer values of the free parameter in the A3 family that survive the
// f- and xi-filters for some admissible divisorial part: {1, 2}.
std::vector<long long> a3_family_refinement();

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Consistency battery over the two tables: the t = 1 dual-twist involution
// A_i <-> A_{6-i}, the exclusion of A7..A9 by invariant mismatch, the
// non-integrality verdicts of table A, the positivity eliminations, and
// the A3 refinement. Mismatches are reported, not thrown.
std::vector<CheckResult> cross_check_tables();

}  // namespace dp7
