// dp7: exact intersection-theory calculator for the degree-7 del Pezzo
// threefold F = P(O + O(1)) over P^2 and its rank-2 aCM bundle census.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O error.
// All output is deterministic: identical invocations print identical bytes.
// Negative coordinates are accepted after "--" or with "=", e.g.
//   dp7 cohom -- -2 2
//   dp7 chi --rank 2 --c1 2 2 --c2=3 3

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dp7/render.hpp"
#include "dp7/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    ok = in.good() || in.eof();
    return data;
}

int run_classify(const std::string& table, dp7::OutputFormat fmt, bool verify,
                 const std::string& golden_dir) {
    std::vector<dp7::ClassificationRow> rows;
    bool with_name = false;
    std::string golden_file;
    if (table == "A" || table == "a") {
        rows = dp7::table_a();
        golden_file = golden_dir + "/table_a.csv";
    } else if (table == "B" || table == "b") {
        rows = dp7::table_b();
        with_name = true;
        golden_file = golden_dir + "/table_b.csv";
    } else {
        std::cerr << "dp7: unknown table '" << table << "' (expected A or B)\n";
        return kExitUsage;
    }
    std::cout << dp7::render(dp7::classification_table(rows, with_name), fmt);
    if (!verify) return kExitOk;

    bool all_ok = true;
    for (const dp7::CheckResult& c : dp7::cross_check_tables()) {
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        all_ok = all_ok && c.passed;
    }
    bool read_ok = true;
    std::string want = read_file(golden_file, read_ok);
    if (!read_ok) {
        std::cerr << "dp7: cannot read golden file " << golden_file << "\n";
        return kExitIo;
    }
    std::string got = dp7::golden_csv(rows, with_name);
    if (got == want) {
        std::cout << "ok    golden file " << golden_file << " matches\n";
    } else {
        std::cout << "FAIL  golden file " << golden_file << " differs\n";
        all_ok = false;
    }
    return all_ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chow-ring, cohomology and aCM-classification calculator "
                 "for the degree-7 del Pezzo threefold"};
    app.require_subcommand(1);
    std::string format_name = "md";
    app.add_option("--format", format_name, "output format: md, csv or records")
        ->capture_default_str();

    long long l1 = 0, l2 = 0;
    auto* cohom = app.add_subcommand("cohom", "cohomology table of O_F(l1*xi + l2*f)");
    cohom->add_option("l1", l1, "coefficient of xi")->required();
    cohom->add_option("l2", l2, "coefficient of f")->required();

    std::string table_name;
    bool verify = false;
    std::string golden_dir = "data";
    auto* classify = app.add_subcommand("classify", "print classification table A or B");
    classify->add_option("table", table_name, "A or B")->required();
    classify->add_flag("--verify", verify, "run cross-checks and golden-file comparison");
    classify->add_option("--golden-dir", golden_dir, "directory holding table_a.csv/table_b.csv")
        ->capture_default_str();

    app.add_subcommand("divisors", "admissible divisorial parts of section zero loci");

    int box = 10;
    auto* acm = app.add_subcommand("acm-lines", "initialized aCM line bundles");
    acm->add_option("--box", box, "scan window |l_i| <= box")->capture_default_str();

    app.add_subcommand("ulrich", "Ulrich Chern data and invariants");

    int rank = 2;
    std::vector<long long> c1_opt{0, 0};
    std::vector<std::string> c2_opt{"0", "0"};
    std::string c3_opt = "0";
    auto* chi = app.add_subcommand("chi", "Euler characteristic from Chern data");
    chi->add_option("--rank", rank, "bundle rank")->capture_default_str();
    chi->add_option("--c1", c1_opt, "c1 coefficients (xi, f)")->expected(2);
    chi->add_option("--c2", c2_opt, "c2 coefficients (xi^2, f^2), rationals allowed")->expected(2);
    chi->add_option("--c3", c3_opt, "c3 point multiplicity")->capture_default_str();

    app.add_subcommand("lines", "the two classes of lines on F");

    std::string report_path;
    auto* report = app.add_subcommand("report", "write the full census report");
    report->add_option("path", report_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    auto fmt = dp7::parse_format(format_name);
    if (!fmt) {
        std::cerr << "dp7: unknown format '" << format_name << "' (expected md, csv or records)\n";
        return kExitUsage;
    }

    try {
        if (cohom->parsed()) {
            std::cout << dp7::render(dp7::cohomology_output({l1, l2}), *fmt);
            return kExitOk;
        }
        if (classify->parsed()) return run_classify(table_name, *fmt, verify, golden_dir);
        if (app.get_subcommand("divisors")->parsed()) {
            std::cout << dp7::render(dp7::divisor_candidates_output(), *fmt);
            return kExitOk;
        }
        if (acm->parsed()) {
            std::cout << dp7::render(dp7::acm_lines_output(box), *fmt);
            return kExitOk;
        }
        if (app.get_subcommand("ulrich")->parsed()) {
            std::cout << dp7::render(dp7::ulrich_output(), *fmt);
            return kExitOk;
        }
        if (chi->parsed()) {
            dp7::Rank2Data b = dp7::make_bundle(
                rank, {c1_opt[0], c1_opt[1]},
                {dp7::parse_rational(c2_opt[0]), dp7::parse_rational(c2_opt[1])},
                dp7::parse_rational(c3_opt));
            std::cout << dp7::render(dp7::chi_output(b), *fmt);
            return kExitOk;
        }
        if (app.get_subcommand("lines")->parsed()) {
            if (*fmt == dp7::OutputFormat::records) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const dp7::ChowClass& c : dp7::enumerate_line_classes())
                    arr.push_back(dp7::chow_record(c));
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << dp7::render(dp7::line_classes_output(), *fmt);
            }
            return kExitOk;
        }
        if (report->parsed()) {
            std::ofstream out(report_path, std::ios::binary);
            if (!out) {
                std::cerr << "dp7: cannot open " << report_path << " for writing\n";
                return kExitIo;
            }
            out << dp7::build_report();
            out.flush();
            if (!out.good()) {
                std::cerr << "dp7: write to " << report_path << " failed\n";
                return kExitIo;
            }
            std::cout << "report written to " << report_path << "\n";
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "dp7: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "dp7: no subcommand handled\n";
    return kExitUsage;
}
