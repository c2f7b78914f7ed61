// Command-line front end: exact partition tables, the identity verification
// suite, congruence scans, and the inequality / growth-bound checks.
//
// Exit codes: 0 all checks pass, 1 mathematical counterexample found,
// 2 usage or I/O error, 3 precision exhausted (bound check only).
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <qpartition/qpartition.hpp>

namespace {

using nlohmann::ordered_json;
using namespace qpartition;

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;
constexpr int exit_precision = 3;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_ratio(double ratio) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", ratio);
    return buf;
}

ordered_json report_to_json(const verification_report& r) {
    ordered_json j;
    j["claim"] = r.claim;
    j["status"] = to_string(r.status);
    j["range"] = r.checked_range;
    if (r.first_counterexample) {
        ordered_json c;
        c["n"] = r.first_counterexample->n;
        c["witness"] = r.first_counterexample->witness;
        j["counterexample"] = c;
    } else {
        j["counterexample"] = nullptr;
    }
    if (r.max_ratio) j["max_ratio"] = *r.max_ratio;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

void write_report_text(std::ostream& os, const verification_report& r) {
    const char* tag = r.status == check_status::pass              ? "[PASS]"
                      : r.status == check_status::fail            ? "[FAIL]"
                                                                  : "[FAIL-PRECISION]";
    os << tag << " " << r.claim << " (" << r.checked_range << ")";
    if (r.first_counterexample) {
        os << " counterexample n=" << r.first_counterexample->n;
        for (const auto& w : r.first_counterexample->witness) os << "; " << w;
    }
    if (r.max_ratio) os << " max ratio " << format_ratio(*r.max_ratio);
    os << " [" << r.elapsed_ms << " ms]\n";
}

void write_reports(std::ostream& os, const std::vector<verification_report>& reports,
                   const std::string& format) {
    if (format == "json") {
        if (reports.size() == 1) {
            os << report_to_json(reports.front()).dump(2) << "\n";
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            os << arr.dump(2) << "\n";
        }
    } else if (format == "csv") {
        os << "claim,status,range,counterexample_n,elapsed_ms\n";
        for (const auto& r : reports) {
            os << csv_escape(r.claim) << "," << to_string(r.status) << ","
               << csv_escape(r.checked_range) << ",";
            if (r.first_counterexample) os << r.first_counterexample->n;
            os << "," << r.elapsed_ms << "\n";
        }
    } else {
        for (const auto& r : reports) write_report_text(os, r);
    }
}

void write_table(std::ostream& os, const partition_table& table, const std::string& format) {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (std::size_t n = 0; n < table.values.size(); ++n) {
            ordered_json row;
            row["n"] = n;
            row["value"] = to_decimal(table.values[n]);
            arr.push_back(row);
        }
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,value\n";
        for (std::size_t n = 0; n < table.values.size(); ++n)
            os << n << "," << to_decimal(table.values[n]) << "\n";
    } else {
        for (std::size_t n = 0; n < table.values.size(); ++n)
            os << n << " " << to_decimal(table.values[n]) << "\n";
    }
}

// Writes through either stdout or --output PATH.
class output_sink {
public:
    explicit output_sink(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int exit_code_for(const std::vector<verification_report>& reports) {
    bool precision = false, fail = false;
    for (const auto& r : reports) {
        if (r.status == check_status::fail) fail = true;
        if (r.status == check_status::precision_exhausted) precision = true;
    }
    if (fail) return exit_counterexample;
    if (precision) return exit_precision;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cubic-partition tables and q-series identity verification"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", output_path, "Write output to a file instead of stdout");

    // table
    auto* cmd_table = app.add_subcommand("table", "Print a partition table");
    std::string table_kind;
    std::uint64_t table_n = 0;
    cmd_table->add_option("kind", table_kind, "Which table: cubic a(n) or classic p(n)")
        ->required()
        ->check(CLI::IsMember({"cubic", "classic"}));
    cmd_table->add_option("--n", table_n, "Number of entries (n = 0 .. N-1)")
        ->required()
        ->check(CLI::PositiveNumber);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Run identity verifications");
    std::string claim_id;
    std::uint64_t order_flag = 0;
    std::string claim_help = "Claim id or 'all'; one of:";
    for (const auto& c : identity_claims()) claim_help += " " + c.id;
    cmd_verify->add_option("claim", claim_id, claim_help)->required();
    cmd_verify->add_option("--order", order_flag,
                           "Series truncation order (default: per-claim, 500 for cubic-gf, "
                           "120 for cyclotomic checks, 200 otherwise)")
        ->check(CLI::PositiveNumber);

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "Scan a congruence a(Mn+r) == 0 (mod d)");
    std::uint64_t scan_m = 0, scan_r = 0, scan_d = 0, scan_nmax = 1000;
    cmd_scan->add_option("--m", scan_m, "Progression modulus M")->required()->check(CLI::PositiveNumber);
    cmd_scan->add_option("--r", scan_r, "Residue r, 0 <= r < M")->required();
    cmd_scan->add_option("--d", scan_d, "Divisor d >= 2")->required();
    cmd_scan->add_option("--nmax", scan_nmax, "Scan 0 <= n <= nmax")->capture_default_str();

    // check
    auto* cmd_check = app.add_subcommand("check", "Check the inequality or the growth bound");
    std::string check_kind;
    std::uint64_t check_nmax = 1000;
    unsigned precision_bits = 128;
    cmd_check->add_option("kind", check_kind, "inequality | bound")
        ->required()
        ->check(CLI::IsMember({"inequality", "bound"}));
    cmd_check->add_option("--nmax", check_nmax, "Check 1 <= n <= nmax (2 <= n for inequality)")
        ->capture_default_str();
    cmd_check->add_option("--precision-bits", precision_bits,
                          "Significand bits for the directed-rounding bound check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        output_sink sink(output_path);
        std::ostream& os = sink.stream();

        if (cmd_table->parsed()) {
            const auto table =
                table_kind == "cubic" ? cubic_table(table_n) : classic_table(table_n);
            write_table(os, table, format);
            return exit_ok;
        }

        if (cmd_verify->parsed()) {
            std::vector<verification_report> reports;
            if (claim_id == "all") {
                for (const auto& c : identity_claims())
                    reports.push_back(run_identity_claim(c.id, order_flag ? order_flag : c.default_order));
            } else {
                std::size_t order = order_flag;
                if (order == 0) {
                    for (const auto& c : identity_claims())
                        if (c.id == claim_id) order = c.default_order;
                    if (order == 0) {
                        std::cerr << "unknown claim id: " << claim_id << "\n";
                        return exit_usage;
                    }
                }
                reports.push_back(run_identity_claim(claim_id, order));
            }
            write_reports(os, reports, format);
            return exit_code_for(reports);
        }

        if (cmd_scan->parsed()) {
            const congruence_claim claim(static_cast<std::uint32_t>(scan_m),
                                         static_cast<std::uint32_t>(scan_r), scan_d);
            const std::vector<verification_report> reports = {scan_congruence(claim, scan_nmax)};
            write_reports(os, reports, format);
            return exit_code_for(reports);
        }

        if (cmd_check->parsed()) {
            const std::vector<verification_report> reports = {
                check_kind == "inequality" ? check_inequality(check_nmax)
                                           : check_bound(check_nmax, precision_bits)};
            write_reports(os, reports, format);
            return exit_code_for(reports);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
