#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "dp7/classify.hpp"
#include "dp7/render.hpp"
#include "test_util.hpp"

using namespace dp7;

namespace {

const CurveClass& beta_of(const ClassificationRow& r) {
    return std::get<BetaUnique>(r.beta).beta;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("divisor candidates") {
    const std::vector<LineBundle> expected = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 0}, {1, -1}, {2, -1}, {2, -2}};
    auto got = divisor_candidates();
    CHECK(got == expected);
    CHECK(got.size() == 8);
    CHECK(std::find(got.begin(), got.end(), LineBundle{1, 1}) == got.end());
    CHECK(std::find(got.begin(), got.end(), LineBundle{0, 5}) == got.end());
}

TEST_CASE("beta solver on named cases") {
    auto no = SectionData::for_divisorial_part(false);
    auto yes = SectionData::for_divisorial_part(true);
    CHECK(no.h0_dual_minus_h == 0);
    CHECK(no.h0_dual == 0);
    CHECK(yes.h0_dual_minus_h == 0);
    CHECK(yes.h0_dual == 1);

    CHECK(solve_beta({1, -1}, no) == BetaSolution{BetaUnique{{Rat(1, 2), Rat(0)}}});
    CHECK(solve_beta({2, -1}, yes) == BetaSolution{BetaUnique{{Rat(-2, 3), Rat(1, 3)}}});
    CHECK(solve_beta({1, 1}, no) == BetaSolution{BetaFamily{Rat(2)}});
    CHECK(solve_beta({0, 1}, yes) == BetaSolution{BetaUnique{{Rat(0), Rat(0)}}});
    // degenerate and inconsistent
    CHECK(solve_beta({1, 1}, yes) == BetaSolution{BetaNone{}});
}

TEST_CASE("beta solutions satisfy the defining equations") {
    for (long long a1 = -4; a1 <= 4; ++a1)
        for (long long a2 = -4; a2 <= 4; ++a2)
            for (bool d_eq : {false, true}) {
                LineBundle alpha{a1, a2};
                SectionData s = SectionData::for_divisorial_part(d_eq);
                auto [rhs1, rhs2] = beta_system_rhs(alpha, s);
                BetaSolution sol = solve_beta(alpha, s);
                if (const auto* u = std::get_if<BetaUnique>(&sol)) {
                    CHECK((Rat(a1) + Rat(a2)) * u->beta.xi2 + Rat(a1) * u->beta.f2 == rhs1);
                    CHECK(Rat(2) * u->beta.xi2 + u->beta.f2 == rhs2);
                } else if (const auto* fam = std::get_if<BetaFamily>(&sol)) {
                    for (long long b = -3; b <= 3; ++b) {
                        Rat b1(b), b2 = fam->hc2 - Rat(2) * b;
                        CHECK((Rat(a1) + Rat(a2)) * b1 + Rat(a1) * b2 == rhs1);
                        CHECK(Rat(2) * b1 + b2 == rhs2);
                    }
                } else {
                    CHECK(a1 == a2);
                    CHECK(rhs1 != Rat(a1) * rhs2);
                }
            }
}

TEST_CASE("table A") {
    auto rows = table_a();
    REQUIRE(rows.size() == 13);
    CHECK(rows[0].alpha == LineBundle{1, -1});
    CHECK(!rows[0].d_equals_c1);
    CHECK(beta_of(rows[0]) == CurveClass{Rat(1, 2), Rat(0)});

    auto find = [&rows](LineBundle alpha, bool d_eq) -> const ClassificationRow& {
        for (const auto& r : rows)
            if (r.alpha == alpha && r.d_equals_c1 == d_eq) return r;
        FAIL("row not found");
        return rows.front();
    };
    CHECK(beta_of(find({2, -2}, false)) == CurveClass{Rat(-1), Rat(1)});
    CHECK(beta_of(find({4, -4}, false)) == CurveClass{Rat(-13, 2), Rat(5)});
    CHECK(beta_of(find({4, -3}, false)) == CurveClass{Rat(-4), Rat(3)});
    CHECK(find({4, -3}, false).verdict == Verdict::ruled_out_positivity);
    CHECK(find({3, -2}, false).verdict == Verdict::ruled_out_nonintegral);
    CHECK(find({1, -1}, true).verdict == Verdict::split_bundle);
    // no realized rows: every first Chern class here has a negative entry
    for (const auto& r : rows) CHECK(r.verdict != Verdict::realized);
}

TEST_CASE("table A golden file") {
    CHECK(golden_csv(table_a(), false) == read_file(std::string(DP7_DATA_DIR) + "/table_a.csv"));
}

TEST_CASE("table B") {
    auto rows = table_b();
    REQUIRE(rows.size() == 10);
    auto row = [&rows](const std::string& name) -> const ClassificationRow& {
        for (const auto& r : rows)
            if (r.name == name) return r;
        FAIL("row not found");
        return rows.front();
    };
    CHECK(row("A0").alpha == LineBundle{0, 1});
    CHECK(!row("A0").d_equals_c1);
    CHECK(beta_of(row("A0")) == CurveClass{Rat(0), Rat(1)});
    CHECK(row("A0").verdict == Verdict::realized);

    CHECK(row("A3").alpha == LineBundle{1, 1});
    CHECK(row("A3").beta == BetaSolution{BetaFamily{Rat(2)}});

    CHECK(row("A6").alpha == LineBundle{2, 1});
    CHECK(beta_of(row("A6")) == CurveClass{Rat(2), Rat(1)});
    CHECK(row("A6").verdict == Verdict::realized);

    CHECK(row("A9").alpha == LineBundle{0, 2});
    CHECK(row("A9").d_equals_c1);
    CHECK(beta_of(row("A9")) == CurveClass{Rat(0), Rat(0)});
    CHECK(row("A9").verdict == Verdict::ruled_out_dual);

    for (const char* split : {"A1", "A2", "A3", "A4", "A5"})
        CHECK(row(split).verdict == Verdict::split_bundle);
}

TEST_CASE("table B golden file") {
    CHECK(golden_csv(table_b(), true) == read_file(std::string(DP7_DATA_DIR) + "/table_b.csv"));
}

TEST_CASE("table B integral rows round-trip through the invariants") {
    for (const auto& r : table_b()) {
        if (r.d_equals_c1) continue;
        const auto* u = std::get_if<BetaUnique>(&r.beta);
        if (!u || !u->beta.xi2.is_integer() || !u->beta.f2.is_integer()) continue;
        auto [c1c2, hc2] = invariant_c1c2_hc2(r.alpha, u->beta);
        auto [rhs1, rhs2] = beta_system_rhs(r.alpha, SectionData::for_divisorial_part(false));
        CHECK(c1c2 == rhs1);
        CHECK(hc2 == rhs2);
    }
}

TEST_CASE("ulrich chern data") {
    CHECK(ulrich_c1_solve() == LineBundle{2, 2});
    CHECK(14 - 4 * 2 - 3 * 2 == 0);
    int solutions = 0;
    for (long long a1 = 0; a1 <= 4; ++a1)
        for (long long a2 = 0; a2 <= 4; ++a2)
            if (14 - 4 * a1 - 3 * a2 == 0) ++solutions;
    CHECK(solutions == 1);

    auto c2s = ulrich_c2_enumeration();
    CHECK(c2s == std::vector<std::pair<long long, long long>>{{3, 3}, {4, 1}});
    for (auto [b1, b2] : c2s) {
        CurveClass beta{Rat(b1), Rat(b2)};
        CHECK(chi_rr(make_bundle(2, {2, 2}, beta)) == Rat(14));
        CHECK(invariant_c1c2_hc2({2, 2}, beta) == std::pair{Rat(18), Rat(9)});
    }
}

TEST_CASE("ulrich c2 values lie on the degenerate solve_beta family") {
    BetaSolution sol = solve_beta({2, 2}, SectionData::for_divisorial_part(false));
    const auto* fam = std::get_if<BetaFamily>(&sol);
    REQUIRE(fam != nullptr);
    CHECK(fam->hc2 == Rat(9));
    for (auto [b1, b2] : ulrich_c2_enumeration()) {
        CHECK(Rat(2 * b1 + b2) == fam->hc2);
        CHECK(b2 >= 0);
        CHECK(b1 >= 3);
    }
}

TEST_CASE("effectiveness defect") {
    CHECK(effectiveness_defect(2) == 2);
    CHECK(effectiveness_defect(3) == 5);
    CHECK(effectiveness_defect(4) == 8);
    CHECK_THROWS_AS(effectiveness_defect(1), std::invalid_argument);
    // beyond lambda2 = 2 the defect always exceeds the bound 2
    for (long long l2 = 3; l2 <= 30; ++l2) CHECK(effectiveness_defect(l2) > 2);
}

TEST_CASE("final classification") {
    auto cases = final_classification();
    REQUIRE(cases.size() == 6);
    std::vector<long long> degrees;
    for (const auto& c : cases) {
        Rat d = final_case_degree(c);
        REQUIRE(d.is_integer());
        degrees.push_back(d.num());
    }
    CHECK(degrees == std::vector<long long>{1, 1, 1, 5, 9, 9});
    CHECK(cases[3].c1 == LineBundle{2, 1});
    CHECK(cases[3].tag == "quintic");
    CHECK(cases[5].c2 == CurveClass{Rat(4), Rat(1)});
    CHECK(cases[5].tag == "elliptic");
}

TEST_CASE("a3 family refinement") {
    CHECK(a3_family_refinement() == std::vector<long long>{1, 2});
    CHECK(admissible_divisorial_parts({1, 1}, false) ==
          std::vector<LineBundle>{{0, 1}, {0, 2}, {1, 0}, {1, -1}});
}

TEST_CASE("cross checks all pass") {
    auto checks = cross_check_tables();
    CHECK(checks.size() >= 11);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("dual twist involution on table data") {
    auto rows = table_b();
    auto row = [&rows](const std::string& name) -> const ClassificationRow& {
        for (const auto& r : rows)
            if (r.name == name) return r;
        FAIL("row not found");
        return rows.front();
    };
    for (int i = 0; i <= 2; ++i) {
        const auto& from = row("A" + std::to_string(i));
        const auto& to = row("A" + std::to_string(6 - i));
        TwistedDualData d = dual_twist(from.alpha, beta_of(from), 1);
        CHECK(d.c1 == to.alpha);
        CHECK(d.c2 == beta_of(to));
    }
    // A3 maps to itself
    for (long long b = 0; b <= 3; ++b) {
        TwistedDualData d = dual_twist({1, 1}, {Rat(b), Rat(2 - 2 * b)}, 1);
        CHECK(d.c1 == LineBundle{1, 1});
        CHECK(Rat(2) * d.c2.xi2 + d.c2.f2 == Rat(2));
    }
}
