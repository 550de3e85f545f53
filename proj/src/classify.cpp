#include "dp7/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace dp7 {

namespace {

bool contains(const std::vector<LineBundle>& v, LineBundle x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// Print order for divisor-like pairs: first coefficient ascending,
// then |second| ascending.
bool print_order(LineBundle x, LineBundle y) {
    if (x.l1 != y.l1) return x.l1 < y.l1;
    if (std::llabs(x.l2) != std::llabs(y.l2)) return std::llabs(x.l2) < std::llabs(y.l2);
    return x.l2 > y.l2;
}

const CurveClass* unique_beta(const BetaSolution& s) {
    if (const auto* u = std::get_if<BetaUnique>(&s)) return &u->beta;
    return nullptr;
}

bool beta_is_integral(const BetaSolution& s) {
    const CurveClass* b = unique_beta(s);
    return b && b->xi2.is_integer() && b->f2.is_integer();
}

}  // namespace

std::pair<Rat, Rat> beta_system_rhs(LineBundle alpha, SectionData s) {
    const Rat a1(alpha.l1), a2(alpha.l2);
    Rat rhs1 = Rat(2 * s.h0_dual_minus_h) +
               (a1 * a1 * a1 + Rat(3) * a1 * a1 * a2 + Rat(3) * a1 * a2 * a2 - a1) / Rat(3);
    Rat rhs2 = Rat(s.h0_dual_minus_h - s.h0_dual) +
               (Rat(2) * a1 * a1 + Rat(4) * a1 * a2 + a2 * a2 - Rat(4) * a1 - Rat(3) * a2 + Rat(4)) / Rat(2);
    return {rhs1, rhs2};
}

BetaSolution solve_beta(LineBundle alpha, SectionData s) {
    const auto [rhs1, rhs2] = beta_system_rhs(alpha, s);
    const Rat a1(alpha.l1), a2(alpha.l2);
    const Rat det = a2 - a1;
    if (det != Rat(0)) {
        // Cramer on [[a1+a2, a1], [2, 1]].
        Rat b1 = (rhs1 - a1 * rhs2) / det;
        Rat b2 = ((a1 + a2) * rhs2 - Rat(2) * rhs1) / det;
        return BetaUnique{CurveClass{b1, b2}};
    }
    // a1 = a2: the first row is a1 times the second.
    if (rhs1 == a1 * rhs2) return BetaFamily{rhs2};
    return BetaNone{};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ruled_out_nonintegral: return "ruled-out-nonintegral";
        case Verdict::ruled_out_positivity: return "ruled-out-positivity";
        case Verdict::ruled_out_dual: return "ruled-out-dual";
        case Verdict::split_bundle: return "split-bundle";
        case Verdict::realized: return "realized";
    }
    return "?";
}

std::vector<LineBundle> divisor_candidates() {
    std::vector<LineBundle> out;
    for (long long d1 = 0; d1 <= 2; ++d1)
        for (long long d2 = -4; d2 <= 4; ++d2) {
            if (d1 == 0 && d2 == 0) continue;
            if (d1 + d2 < 0) continue;            // effective
            if (d1 + d2 > 4) continue;            // h^0(O(2h - D)) != 0
            if (d1 >= 1 && d1 + d2 > 1) continue; // h^0(O(D - h)) = 0
            out.push_back({d1, d2});
        }
    std::sort(out.begin(), out.end(), print_order);
    return out;
}

std::vector<LineBundle> admissible_divisorial_parts(LineBundle alpha, bool include_zero) {
    std::vector<LineBundle> out;
    if (include_zero) out.push_back({0, 0});
    for (LineBundle d : divisor_candidates()) {
        LineBundle rest = alpha - d;
        if (rest.l1 >= 0 && rest.l1 + rest.l2 >= 0) out.push_back(d);
    }
    return out;
}

namespace {

ClassificationRow make_row(std::string name, LineBundle alpha, bool d_eq_c1,
                           Verdict fallback, std::string reason) {
    ClassificationRow row;
    row.name = std::move(name);
    row.alpha = alpha;
    row.d_equals_c1 = d_eq_c1;
    row.beta = solve_beta(alpha, SectionData::for_divisorial_part(d_eq_c1));
    if (unique_beta(row.beta) && !beta_is_integral(row.beta)) {
        row.verdict = Verdict::ruled_out_nonintegral;
        row.reason = "c2 would not be integral";
    } else {
        row.verdict = fallback;
        row.reason = std::move(reason);
    }
    return row;
}

}  // namespace

std::vector<ClassificationRow> table_a() {
    const auto candidates = divisor_candidates();
    std::vector<ClassificationRow> rows;
    // Annotations for the rows whose beta comes out integral; everything
    // else is excluded by non-integrality alone.
    struct Note { LineBundle alpha; bool d_eq_c1; Verdict v; const char* why; };
    const Note notes[] = {
        {{1, -1}, true, Verdict::split_bundle, "extension of O by O(xi-f) splits: h^1(O(xi-f)) = 0"},
        {{2, -1}, false, Verdict::split_bundle, "every admissible divisorial part splits the bundle or fails the f-filter"},
        {{2, -2}, false, Verdict::split_bundle, "positivity forces D = xi-f and the self-extension splits"},
        {{4, -3}, false, Verdict::ruled_out_positivity, "c2(E(-D)).f < 0 for every admissible divisorial part"},
    };
    auto annotated = [&](LineBundle alpha, bool d_eq) -> ClassificationRow {
        for (const Note& n : notes)
            if (n.alpha == alpha && n.d_eq_c1 == d_eq)
                return make_row("", alpha, d_eq, n.v, n.why);
        return make_row("", alpha, d_eq, Verdict::ruled_out_nonintegral, "");
    };
    for (long long a1 = 1; a1 <= 4; ++a1)
        for (long long a2 = -1; a2 >= -a1; --a2) {
            LineBundle alpha{a1, a2};
            rows.push_back(annotated(alpha, false));
            if (contains(candidates, alpha)) rows.push_back(annotated(alpha, true));
        }
    return rows;
}

std::vector<ClassificationRow> table_b() {
    const auto candidates = divisor_candidates();
    std::vector<LineBundle> domain;
    for (long long a1 = 0; a1 <= 2; ++a1)
        for (long long a2 = 0; a2 <= 2; ++a2) {
            if (a1 == 0 && a2 == 0) continue;  // c1 = 0: handled with the final cases
            if (a1 == 2 && a2 == 2) continue;  // c1 = 2h: the Ulrich case
            domain.push_back({a1, a2});
        }
    // Row order: increasing degree c1.h^2 = 4 a1 + 3 a2 (distinct here).
    std::sort(domain.begin(), domain.end(), [](LineBundle x, LineBundle y) {
        return 4 * x.l1 + 3 * x.l2 < 4 * y.l1 + 3 * y.l2;
    });

    struct Note { LineBundle alpha; Verdict v; const char* why; };
    const Note no_row_notes[] = {
        {{0, 1}, Verdict::realized, "zero locus of a general section is a line of class f^2"},
        {{1, 0}, Verdict::split_bundle, "decomposes as O(xi-f) + O(f)"},
        {{0, 2}, Verdict::split_bundle, "decomposes as O(f) + O(f)"},
        {{1, 1}, Verdict::split_bundle, "decomposes for each admissible family parameter (1 and 2)"},
        {{2, 0}, Verdict::split_bundle, "decomposes as O(xi) + O(xi)"},
        {{1, 2}, Verdict::split_bundle, "dual twist of a split case"},
        {{2, 1}, Verdict::realized, "zero locus of a general section is a rational quintic"},
    };
    std::vector<ClassificationRow> rows;
    int index = 0;
    for (LineBundle alpha : domain) {
        Verdict v = Verdict::split_bundle;
        std::string why;
        for (const Note& n : no_row_notes)
            if (n.alpha == alpha) { v = n.v; why = n.why; }
        ClassificationRow row = make_row("A" + std::to_string(index++), alpha, false, v, why);
        rows.push_back(row);
    }
    for (LineBundle alpha : domain) {
        if (!contains(candidates, alpha)) continue;
        rows.push_back(make_row("A" + std::to_string(index++), alpha, true,
                                Verdict::ruled_out_dual,
                                "dual twist invariants match no admissible case"));
    }
    return rows;
}

std::vector<std::pair<long long, long long>> ulrich_c2_enumeration() {
    std::vector<std::pair<long long, long long>> out;
    for (long long b1 = 3; 9 - 2 * b1 >= 0; ++b1) out.emplace_back(b1, 9 - 2 * b1);
    return out;
}

LineBundle ulrich_c1_solve() {
    std::vector<LineBundle> hits;
    for (long long a1 = 0; a1 <= 4; ++a1)
        for (long long a2 = 0; a2 <= 4; ++a2)
            if (14 - 4 * a1 - 3 * a2 == 0) hits.push_back({a1, a2});
    if (hits.size() != 1) throw std::logic_error("ulrich_c1_solve: expected a unique solution");
    return hits.front();
}

long long effectiveness_defect(long long lambda2) {
    if (lambda2 < 2) throw std::invalid_argument("effectiveness_defect: lambda2 >= 2 required");
    return 2 * binom2(lambda2) - binom2(lambda2 - 1) - binom2(lambda2 - 2);
}

std::vector<FinalCase> final_classification() {
    return {
        {{0, 0}, {Rat(0), Rat(1)}, "line"},
        {{0, 0}, {Rat(1), Rat(-1)}, "line"},
        {{0, 1}, {Rat(0), Rat(1)}, "line"},
        {{2, 1}, {Rat(2), Rat(1)}, "quintic"},
        {{2, 2}, {Rat(3), Rat(3)}, "elliptic"},
        {{2, 2}, {Rat(4), Rat(1)}, "elliptic"},
    };
}

Rat final_case_degree(const FinalCase& c) {
    return degree(chow_h() * zero_locus_class(c.c1, c.c2, LineBundle{0, 0}));
}

std::vector<long long> a3_family_refinement() {
    std::vector<long long> out;
    const LineBundle alpha{1, 1};
    for (LineBundle d : admissible_divisorial_parts(alpha, false)) {
        for (long long b = -20; b <= 20; ++b) {
            CurveClass beta{Rat(b), Rat(2 - 2 * b)};
            PositivityFilters flt = positivity_filters(zero_locus_class(alpha, beta, d));
            if (flt.f_nonneg && flt.xi_nonneg &&
                std::find(out.begin(), out.end(), b) == out.end())
                out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CheckResult> cross_check_tables() {
    std::vector<CheckResult> results;
    auto add = [&results](std::string name, bool ok, std::string detail) {
        results.push_back({std::move(name), ok, std::move(detail)});
    };

    const auto rows_b = table_b();
    auto row_b = [&rows_b](const std::string& name) -> const ClassificationRow& {
        for (const auto& r : rows_b)
            if (r.name == name) return r;
        throw std::logic_error("cross_check_tables: missing row " + name);
    };

    // t = 1 dual twist pairs up A_i with A_{6-i} on the nose.
    for (int i = 0; i <= 2; ++i) {
        const auto& from = row_b("A" + std::to_string(i));
        const auto& to = row_b("A" + std::to_string(6 - i));
        const CurveClass* b_from = unique_beta(from.beta);
        const CurveClass* b_to = unique_beta(to.beta);
        bool ok = b_from && b_to;
        if (ok) {
            TwistedDualData d = dual_twist(from.alpha, *b_from, 1);
            ok = d.c1 == to.alpha && d.c2 == *b_to;
        }
        add("dual-involution-A" + std::to_string(i) + "-A" + std::to_string(6 - i), ok,
            ok ? "data mapped exactly" : "dual twist data mismatch");
    }

    // A7..A9 land on an admissible c1 but with the wrong c2, so they
    // cannot occur.
    for (int i = 7; i <= 9; ++i) {
        const auto& from = row_b("A" + std::to_string(i));
        const CurveClass* b_from = unique_beta(from.beta);
        bool ok = b_from != nullptr;
        std::string detail = "no unique beta";
        if (ok) {
            TwistedDualData d = dual_twist(from.alpha, *b_from, 1);
            ok = false;
            for (const auto& r : rows_b) {
                if (r.d_equals_c1 || r.alpha != d.c1) continue;
                const CurveClass* b_r = unique_beta(r.beta);
                if (b_r && !(*b_r == d.c2)) {
                    ok = true;
                    detail = "maps onto " + r.name + " with c2 " + to_string(d.c2.xi2) + "," +
                             to_string(d.c2.f2) + " != " + to_string(b_r->xi2) + "," + to_string(b_r->f2);
                }
            }
        }
        add("dual-excludes-A" + std::to_string(i), ok, detail);
    }

    // Every fractional beta in table A carries the non-integrality verdict.
    {
        int fractional = 0;
        bool ok = true;
        for (const auto& r : table_a()) {
            const CurveClass* b = unique_beta(r.beta);
            if (!b) { ok = false; continue; }
            if (!b->xi2.is_integer() || !b->f2.is_integer()) {
                ++fractional;
                if (r.verdict != Verdict::ruled_out_nonintegral) ok = false;
            }
        }
        add("table-a-fractional-rows-marked", ok && fractional == 9,
            std::to_string(fractional) + " fractional rows");
    }

    // The positivity filters kill the cases the arguments kill.
    {
        PositivityFilters flt = positivity_filters(
            zero_locus_class({2, -1}, {Rat(0), Rat(0)}, {0, 1}));
        add("positivity-kills-2xi-f-with-D-f", !flt.f_nonneg, "class -2xi^2+2f^2");
    }
    {
        PositivityFilters flt = positivity_filters(
            zero_locus_class({2, 0}, {Rat(1), Rat(0)}, {0, 1}));
        add("positivity-kills-A4-with-D-f", !flt.f_nonneg, "class -xi^2+f^2");
    }
    {
        PositivityFilters flt = positivity_filters(
            zero_locus_class({1, 0}, {Rat(1), Rat(-1)}, {2, -2}));
        add("positivity-kills-c1-xi-with-D-2xi-2f", !flt.f_nonneg, "class -3xi^2+3f^2");
    }
    {
        bool all_fail = true;
        for (LineBundle d : admissible_divisorial_parts({4, -3}, true)) {
            PositivityFilters flt = positivity_filters(
                zero_locus_class({4, -3}, {Rat(-4), Rat(3)}, d));
            if (flt.f_nonneg) all_fail = false;
        }
        add("positivity-kills-4xi-3f-every-D", all_fail, "f-filter fails for all admissible D");
    }

    {
        auto refinement = a3_family_refinement();
        add("a3-family-beta-1-or-2", refinement == std::vector<long long>{1, 2},
            "admissible family parameters");
    }

    return results;
}

}  // namespace dp7
