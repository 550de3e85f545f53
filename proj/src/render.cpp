#include "dp7/render.hpp"

#include <stdexcept>

namespace dp7 {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "md" || name == "markdown") return OutputFormat::markdown;
    if (name == "csv") return OutputFormat::csv;
    if (name == "records") return OutputFormat::records;
    return std::nullopt;
}

namespace {

std::string csv_cell(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const TextTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_markdown(const TextTable& t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&width](const std::vector<std::string>& cells) {
        std::string out = "|";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += ' ';
            out += cells[i];
            out += std::string(width[i] - cells[i].size(), ' ');
            out += " |";
        }
        return out + "\n";
    };
    std::string out = line(t.columns);
    out += "|";
    for (std::size_t w : width) out += ' ' + std::string(w, '-') + " |";
    out += "\n";
    for (const auto& row : t.rows) out += line(row);
    return out;
}

std::string render_records(const TextTable& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

}  // namespace

std::string render(const TextTable& t, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::markdown: return render_markdown(t);
        case OutputFormat::csv: return render_csv(t);
        case OutputFormat::records: return render_records(t);
    }
    throw std::logic_error("render: unknown format");
}

TextTable parse_records(const std::string& text) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::parse(text);
    TextTable t;
    for (const auto& obj : arr) {
        if (t.columns.empty())
            for (auto it = obj.begin(); it != obj.end(); ++it) t.columns.push_back(it.key());
        std::vector<std::string> row;
        for (const auto& col : t.columns) row.push_back(obj.at(col).get<std::string>());
        t.rows.push_back(std::move(row));
    }
    return t;
}

nlohmann::ordered_json chow_record(const ChowClass& a) {
    nlohmann::ordered_json j;
    j["c0"] = to_string(a.c0);
    j["xi"] = to_string(a.xi);
    j["f"] = to_string(a.f);
    j["xi2"] = to_string(a.xi2);
    j["f2"] = to_string(a.f2);
    j["pt"] = to_string(a.pt);
    return j;
}

ChowClass chow_from_record(const nlohmann::json& j) {
    auto field = [&j](const char* key) { return parse_rational(j.at(key).get<std::string>()); };
    return {field("c0"), field("xi"), field("f"), field("xi2"), field("f2"), field("pt")};
}

std::pair<std::string, std::string> beta_cells(const BetaSolution& s) {
    if (const auto* u = std::get_if<BetaUnique>(&s))
        return {to_string(u->beta.xi2), to_string(u->beta.f2)};
    if (const auto* fam = std::get_if<BetaFamily>(&s)) {
        // beta2 = hc2 - 2*beta1; factored when the constant is even.
        if (fam->hc2 == Rat(2)) return {"b", "2(1-b)"};
        if (fam->hc2 == Rat(0)) return {"b", "-2b"};
        return {"b", to_string(fam->hc2) + "-2b"};
    }
    return {"-", "-"};
}

namespace {

std::vector<std::string> printed_cells(const ClassificationRow& r, bool with_name) {
    std::vector<std::string> cells;
    if (with_name) cells.push_back(r.name);
    cells.push_back(std::to_string(r.alpha.l1));
    cells.push_back(std::to_string(r.alpha.l2));
    cells.push_back(r.d_equals_c1 ? "yes" : "no");
    auto [b1, b2] = beta_cells(r.beta);
    cells.push_back(b1);
    cells.push_back(b2);
    return cells;
}

std::vector<std::string> printed_columns(bool with_name) {
    std::vector<std::string> cols;
    if (with_name) cols.push_back("name");
    cols.insert(cols.end(), {"alpha1", "alpha2", "d_eq_c1", "beta1", "beta2"});
    return cols;
}

}  // namespace

TextTable classification_table(const std::vector<ClassificationRow>& rows, bool with_name) {
    TextTable t;
    t.columns = printed_columns(with_name);
    t.columns.push_back("verdict");
    t.columns.push_back("reason");
    for (const auto& r : rows) {
        auto cells = printed_cells(r, with_name);
        cells.push_back(to_string(r.verdict));
        cells.push_back(r.reason);
        t.rows.push_back(std::move(cells));
    }
    return t;
}

std::string golden_csv(const std::vector<ClassificationRow>& rows, bool with_name) {
    TextTable t;
    t.columns = printed_columns(with_name);
    for (const auto& r : rows) t.rows.push_back(printed_cells(r, with_name));
    return render(t, OutputFormat::csv);
}

TextTable cohomology_output(LineBundle l) {
    CohomologyTable h = cohomology_table(l);
    TextTable t;
    t.columns = {"l1", "l2", "bundle", "h0", "h1", "h2", "h3", "chi"};
    t.rows = {{std::to_string(l.l1), std::to_string(l.l2), to_string(l),
               std::to_string(h.h0), std::to_string(h.h1), std::to_string(h.h2),
               std::to_string(h.h3), std::to_string(h.chi())}};
    return t;
}

TextTable divisor_candidates_output() {
    TextTable t;
    t.columns = {"delta1", "delta2", "class"};
    for (LineBundle d : divisor_candidates())
        t.rows.push_back({std::to_string(d.l1), std::to_string(d.l2), to_string(d)});
    return t;
}

TextTable acm_lines_output(int box) {
    TextTable t;
    t.columns = {"l1", "l2", "bundle", "h0"};
    for (LineBundle l : enumerate_acm_initialized_lines(box))
        t.rows.push_back({std::to_string(l.l1), std::to_string(l.l2), to_string(l),
                          std::to_string(cohomology_table(l).h0)});
    return t;
}

TextTable ulrich_output() {
    LineBundle alpha = ulrich_c1_solve();
    TextTable t;
    t.columns = {"alpha1", "alpha2", "beta1", "beta2", "chi", "h_c2", "c1_c2"};
    for (auto [b1, b2] : ulrich_c2_enumeration()) {
        CurveClass beta{Rat(b1), Rat(b2)};
        Rat chi = chi_rr(make_bundle(2, alpha, beta));
        auto [c1c2, hc2] = invariant_c1c2_hc2(alpha, beta);
        t.rows.push_back({std::to_string(alpha.l1), std::to_string(alpha.l2),
                          std::to_string(b1), std::to_string(b2), to_string(chi),
                          to_string(hc2), to_string(c1c2)});
    }
    return t;
}

TextTable chi_output(const Rank2Data& b) {
    TextTable t;
    t.columns = {"rank", "c1_xi", "c1_f", "c2_xi2", "c2_f2", "c3", "chi_rr", "chi_hrr"};
    t.rows = {{std::to_string(b.rank), to_string(b.c1.xi), to_string(b.c1.f),
               to_string(b.c2.xi2), to_string(b.c2.f2), to_string(b.c3.pt),
               to_string(chi_rr(b)), to_string(chi_hrr(b))}};
    return t;
}

TextTable line_classes_output() {
    TextTable t;
    t.columns = {"xi2", "f2", "h_degree"};
    for (const ChowClass& c : enumerate_line_classes())
        t.rows.push_back({to_string(c.xi2), to_string(c.f2), to_string(degree(chow_h() * c))});
    return t;
}

TextTable final_classification_output() {
    TextTable t;
    t.columns = {"c1", "c2_xi2", "c2_f2", "zero_locus", "degree"};
    for (const FinalCase& c : final_classification())
        t.rows.push_back({to_string(c.c1), to_string(c.c2.xi2), to_string(c.c2.f2),
                          c.tag, to_string(final_case_degree(c))});
    return t;
}

}  // namespace dp7
