#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dp7/classify.hpp"
#include "dp7/surface.hpp"

namespace dp7 {

enum class OutputFormat { markdown, csv, records };
std::optional<OutputFormat> parse_format(std::string_view name);  // md, csv, records

// One flat string table feeds all three renderers, so every command output
// is deterministic and byte-stable across formats.
struct TextTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const TextTable&) const = default;
};

std::string render(const TextTable& t, OutputFormat fmt);

// Inverse of render(..., records): parses the JSON array back into the
// table. Round-trips losslessly.
TextTable parse_records(const std::string& text);

// {c0, xi, f, xi2, f2, pt} with exact rationals rendered as "p/q" strings.
nlohmann::ordered_json chow_record(const ChowClass& a);
ChowClass chow_from_record(const nlohmann::json& j);

// Cells for a beta solution: a unique pair prints its entries, the family
// prints ("b", "2(1-b)") style, no solution prints ("-", "-").
std::pair<std::string, std::string> beta_cells(const BetaSolution& s);

// A classification table with all engine columns (verdict and reason
// included). Table B carries the name column.
TextTable classification_table(const std::vector<ClassificationRow>& rows, bool with_name);

// The canonical golden encoding: only the printed-table columns
// (name,) alpha1, alpha2, d_eq_c1, beta1, beta2 as CSV.
std::string golden_csv(const std::vector<ClassificationRow>& rows, bool with_name);

TextTable cohomology_output(LineBundle l);
TextTable divisor_candidates_output();
TextTable acm_lines_output(int box);
TextTable ulrich_output();
TextTable chi_output(const Rank2Data& b);
TextTable line_classes_output();
TextTable final_classification_output();

}  // namespace dp7
