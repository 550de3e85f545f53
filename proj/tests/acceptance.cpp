// Acceptance suite: one line per criterion, exact comparisons throughout
// (every quantity is an integer or an exact rational; tolerance is zero).
// Exits nonzero if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "dp7/classify.hpp"
#include "dp7/surface.hpp"
#include "test_util.hpp"

using namespace dp7;

namespace {

int g_failures = 0;

void criterion(int idx, const std::string& label, bool ok, const std::string& detail = "") {
    std::string line = ok ? "PASS" : "FAIL";
    line += "  " + std::to_string(idx) + ". " + label;
    if (!detail.empty()) line += " [" + detail + "]";
    std::puts(line.c_str());
    if (!ok) ++g_failures;
}

struct ExpectedRow {
    long long a1, a2;
    bool d_eq;
    const char* b1;
    const char* b2;  // "b"/"2(1-b)" marks the one-parameter family
};

bool rows_match(const std::vector<ClassificationRow>& rows,
                const std::vector<ExpectedRow>& expected, std::string& detail) {
    if (rows.size() != expected.size()) {
        detail = "row count " + std::to_string(rows.size());
        return false;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto& e = expected[i];
        bool ok = r.alpha == LineBundle{e.a1, e.a2} && r.d_equals_c1 == e.d_eq;
        if (std::string(e.b1) == "b") {
            const auto* fam = std::get_if<BetaFamily>(&r.beta);
            ok = ok && fam && fam->hc2 == Rat(2);
        } else {
            const auto* u = std::get_if<BetaUnique>(&r.beta);
            ok = ok && u && u->beta.xi2 == parse_rational(e.b1) && u->beta.f2 == parse_rational(e.b2);
        }
        if (!ok) {
            detail = "mismatch at row " + std::to_string(i);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    // 1. Table A: all 13 rows including the fractional pairs.
    {
        const std::vector<ExpectedRow> expected = {
            {1, -1, false, "1/2", "0"},  {1, -1, true, "0", "0"},
            {2, -1, false, "0", "0"},    {2, -1, true, "-2/3", "1/3"},
            {2, -2, false, "-1", "1"},   {2, -2, true, "-3/2", "1"},
            {3, -1, false, "1/4", "1/2"}, {3, -2, false, "-8/5", "6/5"},
            {3, -3, false, "-10/3", "8/3"}, {4, -1, false, "8/5", "4/5"},
            {4, -2, false, "-4/3", "5/3"}, {4, -3, false, "-4", "3"},
            {4, -4, false, "-13/2", "5"},
        };
        std::string detail;
        criterion(1, "Table A reproduction (13 rows, exact)", rows_match(table_a(), expected, detail), detail);
    }

    // 2. Table B: rows A0..A9 including the A3 family (b, 2(1-b)).
    {
        const std::vector<ExpectedRow> expected = {
            {0, 1, false, "0", "1"}, {1, 0, false, "1", "-1"}, {0, 2, false, "0", "1"},
            {1, 1, false, "b", "2(1-b)"}, {2, 0, false, "1", "0"}, {1, 2, false, "2", "0"},
            {2, 1, false, "2", "1"}, {0, 1, true, "0", "0"}, {1, 0, true, "0", "0"},
            {0, 2, true, "0", "0"},
        };
        auto rows = table_b();
        std::string detail;
        bool ok = rows_match(rows, expected, detail);
        for (std::size_t i = 0; ok && i < rows.size(); ++i)
            if (rows[i].name != "A" + std::to_string(i)) {
                ok = false;
                detail = "bad name at row " + std::to_string(i);
            }
        criterion(2, "Table B reproduction (A0..A9, exact)", ok, detail);
    }

    // 3. Initialized aCM line bundles: exactly {O, f, 2f, xi, xi-f}, none Ulrich.
    {
        const std::vector<LineBundle> expected = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, -1}};
        bool ok = enumerate_acm_initialized_lines(10) == expected &&
                  enumerate_acm_initialized_lines(20) == expected;
        for (LineBundle l : expected) ok = ok && cohomology_table(l).h0 != 7;
        criterion(3, "aCM line bundles: {O, f, 2f, xi, xi-f}, no Ulrich line bundle", ok);
    }

    // 4. The eight divisorial-part candidates.
    {
        const std::vector<LineBundle> expected = {
            {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 0}, {1, -1}, {2, -1}, {2, -2}};
        criterion(4, "divisor candidates: the 8 admissible classes", divisor_candidates() == expected);
    }

    // 5. Ulrich invariants.
    {
        bool ok = ulrich_c1_solve() == LineBundle{2, 2};
        ok = ok && ulrich_c2_enumeration() ==
                       std::vector<std::pair<long long, long long>>{{3, 3}, {4, 1}};
        for (auto [b1, b2] : ulrich_c2_enumeration()) {
            CurveClass beta{Rat(b1), Rat(b2)};
            ok = ok && chi_rr(make_bundle(2, {2, 2}, beta)) == Rat(7 * 2);
            ok = ok && invariant_c1c2_hc2({2, 2}, beta) == std::pair<Rat, Rat>{Rat(18), Rat(9)};
        }
        criterion(5, "Ulrich invariants: c1 = (2,2), c2 in {(3,3),(4,1)}, chi = 14, h.c2 = 9, c1.c2 = 18", ok);
    }

    // 6. Endomorphism-bundle numbers: chi = -4 in the self and cross cases,
    //    so h^1 = 5 (with h0 = 1, h2 = h3 = 0) and h^1 = 4 (all other h^i = 0).
    {
        LineBundle two_h{2, 2};
        CurveClass b33{Rat(3), Rat(3)}, b41{Rat(4), Rat(1)};
        Rat self33 = end_bundle_chi(two_h, b33, two_h, b33);
        Rat self41 = end_bundle_chi(two_h, b41, two_h, b41);
        Rat cross = end_bundle_chi(two_h, b33, two_h, b41);
        long long h1_self = 1 + 0 - 0 - self33.num();  // h0 - chi with h2 = h3 = 0
        long long h1_cross = -cross.num();
        bool ok = self33 == Rat(-4) && self41 == Rat(-4) && cross == Rat(-4) &&
                  self33.is_integer() && cross.is_integer() && h1_self == 5 && h1_cross == 4;
        criterion(6, "end-bundle chi = -4: h^1(End) = 5 (self), h^1 = 4 (cross)", ok);
    }

    // 7. Oracle equivalences.
    {
        bool ok = true;
        std::string detail;

        dp7test::Rng rng(77);
        int runs = 0;
        for (; runs < 1000 && ok; ++runs) {
            int rank = static_cast<int>(rng.ll(1, 2));
            Rank2Data b = make_bundle(rank, {rng.ll(-6, 6), rng.ll(-6, 6)},
                                      {rng.rat(12), rng.rat(12)}, Rat(rng.ll(-6, 6)));
            if (chi_rr(b) != chi_hrr(b)) {
                ok = false;
                detail = "chi_rr != chi_hrr at run " + std::to_string(runs);
            }
        }

        for (long long a = -12; a <= 12 && ok; ++a)
            for (long long b = -12; b <= 12 && ok; ++b) {
                CohomologyTable t = cohomology_table({a, b});
                if (Rat(t.chi()) != chi_rr(make_bundle(1, {a, b}, {Rat(0), Rat(0)}))) {
                    ok = false;
                    detail = "rank-1 chi mismatch";
                }
                CohomologyTable d = cohomology_table(serre_dual({a, b}));
                if (t.h0 != d.h3 || t.h1 != d.h2 || t.h2 != d.h1 || t.h3 != d.h0) {
                    ok = false;
                    detail = "serre duality mismatch";
                }
            }

        long long checked = 0;
        for (long long a1 = -5; a1 <= 5 && ok; ++a1)
            for (long long a2 = -5; a2 <= 5 && ok; ++a2)
                for (long long b1 = -5; b1 <= 5 && ok; ++b1)
                    for (long long b2 = -5; b2 <= 5 && ok; ++b2) {
                        Rank2Data data = make_bundle(2, {a1, a2}, {Rat(b1), Rat(b2)});
                        for (long long d1 = -5; d1 <= 5 && ok; ++d1)
                            for (long long d2 = -5; d2 <= 5 && ok; ++d2) {
                                ++checked;
                                if (twist(data, {-d1, -d2}).c2 !=
                                    zero_locus_class({a1, a2}, {Rat(b1), Rat(b2)}, {d1, d2})) {
                                    ok = false;
                                    detail = "zero-locus class mismatch";
                                }
                            }
                    }
        ok = ok && checked == 11LL * 11 * 11 * 11 * 11 * 11;
        criterion(7, "oracle equivalence: chi routes (1000 runs), rank-1 chi, Serre duality, twist vs closed form (|params| <= 5)", ok, detail);
    }

    // 8. The t = 1 dual-twist involution on the table data.
    {
        auto rows = table_b();
        auto beta_of = [](const ClassificationRow& r) { return std::get<BetaUnique>(r.beta).beta; };
        bool ok = true;
        for (int i = 0; i <= 2 && ok; ++i) {
            TwistedDualData d = dual_twist(rows[i].alpha, beta_of(rows[i]), 1);
            ok = d.c1 == rows[6 - i].alpha && d.c2 == beta_of(rows[6 - i]);
        }
        criterion(8, "dual twist maps A0->A6, A1->A5, A2->A4 exactly", ok);
    }

    // 9. Geometry constants.
    {
        const ChowClass h = chow_h();
        bool ok = degree(h * h * h) == Rat(7);
        ok = ok && h * h == curve_class(3, 1);
        ok = ok && chi_hrr({1, {}, {}, {}}) == Rat(1);
        ok = ok && degree((chow_xi() - chow_f()) * h * h) == Rat(1);
        auto lines = enumerate_line_classes();
        ok = ok && lines == std::vector<ChowClass>{curve_class(0, 1), curve_class(1, -1)};
        std::vector<long long> degrees;
        for (const FinalCase& c : final_classification()) degrees.push_back(final_case_degree(c).num());
        ok = ok && degrees == std::vector<long long>{1, 1, 1, 5, 9, 9};
        criterion(9, "geometry constants: h^3 = 7, h^2 = 3xi^2+f^2, chi(O_F) = 1, (xi-f).h^2 = 1, line classes, final degrees", ok);
    }

    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::puts("all 9 criteria passed");
    return 0;
}
