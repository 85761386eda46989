// Command-line front end: curve analysis, family sweeps and raw ideal
// operations with machine-readable output.
//
// Exit codes: 0 success, 1 bad input or I/O, 2 violated internal
// invariant or a theorem/computation mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <moncurve/moncurve.hpp>

namespace {

using namespace moncurve;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        int v = static_cast<int>(detail::parse_int(text, what));
        return {v, v};
    }
    return {static_cast<int>(detail::parse_int(text.substr(0, colon), what)),
            static_cast<int>(detail::parse_int(text.substr(colon + 1), what))};
}

Monomial parse_monomial(const std::string& text, const char* what) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        fail(errc::parse_error, std::string(what) + " '" + text + "' is not of the form A,B");
    return {detail::parse_int(text.substr(0, comma), what), detail::parse_int(text.substr(comma + 1), what)};
}

// MONCURVE_JOBS beats the flag; unset flag means available parallelism.
int effective_jobs(int flag_jobs) {
    if (const char* env = std::getenv("MONCURVE_JOBS")) {
        long long v = detail::parse_int(env, "MONCURVE_JOBS");
        if (v >= 1) return static_cast<int>(v);
    }
    if (flag_jobs >= 1) return flag_jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
    file << text;
    if (!file) throw std::runtime_error("write to '" + out_path + "' failed");
}

std::string verdict_table(const BoundedVerdict& v, bool pair) {
    std::string out = v.holds ? "holds" : "fails";
    out += " bound=" + std::to_string(v.bound);
    if (!v.holds) {
        if (pair && v.counterexample.size() == 2)
            out += " f=" + v.counterexample[0].str() + " g=" + v.counterexample[1].str();
        else if (!v.counterexample.empty())
            out += " counterexample=" + v.counterexample[0].str();
    }
    out += '\n';
    return out;
}

json verdict_json(const BoundedVerdict& v, bool pair) {
    json j;
    j["holds"] = v.holds;
    j["bound"] = v.bound;
    if (!v.holds) {
        if (pair && v.counterexample.size() == 2) {
            j["f"] = json::array({v.counterexample[0].s_exp, v.counterexample[0].t_exp});
            j["g"] = json::array({v.counterexample[1].s_exp, v.counterexample[1].t_exp});
        } else if (!v.counterexample.empty()) {
            j["counterexample"] = json::array({v.counterexample[0].s_exp, v.counterexample[0].t_exp});
        }
        if (!v.note.empty()) j["note"] = v.note;
    }
    return j;
}

json ideal_json(const MonomialIdeal& ideal) {
    json j;
    j["curve"] = ideal.curve().str();
    j["gens"] = detail::monomials_to_json(ideal.gens());
    j["bound"] = ideal.computed_bound() ? json(*ideal.computed_bound()) : json(nullptr);
    return j;
}

// rows already computed; returns the process exit code
int finish_rows(const std::vector<VerificationRow>& rows, const std::string& format, const std::string& out_path,
                bool rows_to_file) {
    std::string body;
    if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(row_to_json(row));
        body = arr.dump(2) + "\n";
    } else if (format == "csv" || rows_to_file) {
        body = sweep_csv_header() + "\n";
        for (const auto& row : rows) body += row_to_csv(row) + "\n";
    } else {
        for (const auto& row : rows) body += row_to_table(row);
    }
    emit(body, out_path);
    const SweepSummary s = summarize(rows);
    std::cout << summary_line(s) << '\n';
    return (s.mismatched || s.errors) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of projective monomial curves via sumset and monomial-ideal arithmetic"};
    app.require_subcommand(1);

    std::string curve_text, format = "table", out_path;
    std::string r_text, n_text;
    int degree_bound = -1;
    int jobs_flag = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--out", out_path, "write the result to this file");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "compute the invariant report of one curve");
    analyze->add_option("--curve", curve_text, "curve as d:g1,g2,...,gk")->required();
    analyze->add_option("--degree-bound", degree_bound, "override the Macaulayfication degree bound");
    add_format(analyze);

    CLI::App* family = app.add_subcommand("family", "predict and verify family members");
    family->add_option("--r", r_text, "parameter r or range r_lo:r_hi")->required();
    family->add_option("--n", n_text, "parameter n or range n_lo:n_hi")->required();
    family->add_option("--jobs", jobs_flag, "parallel rows (MONCURVE_JOBS overrides)");
    add_format(family);

    CLI::App* sweep = app.add_subcommand("sweep", "verify a parameter rectangle and write a CSV");
    sweep->add_option("--r", r_text, "range r_lo:r_hi")->required();
    sweep->add_option("--n", n_text, "range n_lo:n_hi")->required();
    sweep->add_option("--out", out_path, "CSV output path")->required();
    sweep->add_option("--jobs", jobs_flag, "parallel rows (MONCURVE_JOBS overrides)");

    CLI::App* ideal_cmd = app.add_subcommand("ideal", "monomial-ideal arithmetic");
    ideal_cmd->require_subcommand(1);
    std::vector<std::string> ideal_texts;
    std::string by_text, monomial_text;
    int bound_flag = -1;

    auto add_ideal_common = [&](CLI::App* cmd, int ideal_count) {
        auto* opt = cmd->add_option("--ideal", ideal_texts, "ideal as curve|A,B;A,B;...");
        opt->required()->expected(ideal_count);
        cmd->add_option("--bound", bound_flag, "degree bound (default from the curve)");
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--out", out_path, "write the result to this file");
    };

    CLI::App* i_member = ideal_cmd->add_subcommand("member", "exact membership of a monomial");
    add_ideal_common(i_member, 1);
    i_member->add_option("--monomial", monomial_text, "monomial as A,B")->required();

    CLI::App* i_colon = ideal_cmd->add_subcommand("colon", "colon ideal (I : f)");
    add_ideal_common(i_colon, 1);
    i_colon->add_option("--by", by_text, "monomial f as A,B")->required();

    CLI::App* i_saturate = ideal_cmd->add_subcommand("saturate", "saturation (I : f^inf)");
    add_ideal_common(i_saturate, 1);
    i_saturate->add_option("--by", by_text, "monomial f as A,B")->required();

    CLI::App* i_intersect = ideal_cmd->add_subcommand("intersect", "intersection of two ideals");
    add_ideal_common(i_intersect, 2);

    CLI::App* i_equal = ideal_cmd->add_subcommand("equal", "degreewise equality of two ideals");
    add_ideal_common(i_equal, 2);

    CLI::App* i_primary = ideal_cmd->add_subcommand("primary", "bounded primary test");
    add_ideal_common(i_primary, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) {
            const Curve curve = Curve::parse(curve_text);
            const InvariantReport report = classify(curve, degree_bound);
            emit(format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_table(report), out_path);
            return 0;
        }

        if (family->parsed() || sweep->parsed()) {
            const Range r = parse_range(r_text, "r");
            const Range n = parse_range(n_text, "n");
            const int jobs = effective_jobs(jobs_flag);
            const bool single = family->parsed() && r.lo == r.hi && n.lo == n.hi;
            if (single) {
                const VerificationRow row = verify_one(r.lo, n.lo);
                emit(format == "json" ? row_to_json(row).dump(2) + "\n" : row_to_table(row), out_path);
                if (!row.report) return row.detail.find("ParamsOutOfRange") != std::string::npos ? 1 : 2;
                return row.match ? 0 : 2;
            }
            auto rows = verify_family(r.lo, r.hi, n.lo, n.hi, jobs);
            return finish_rows(rows, sweep->parsed() ? "csv" : format, out_path, sweep->parsed());
        }

        if (ideal_cmd->parsed()) {
            MonomialIdeal lhs = MonomialIdeal::parse(ideal_texts.at(0));
            const int bound = bound_flag >= 0 ? bound_flag : default_degree_bound(lhs.curve());
            std::string body;
            json j;
            if (i_member->parsed()) {
                const bool in = lhs.contains(parse_monomial(monomial_text, "monomial"));
                body = std::string(in ? "true" : "false") + "\n";
                j["member"] = in;
            } else if (i_colon->parsed() || i_saturate->parsed()) {
                const Monomial f = parse_monomial(by_text, "divisor");
                const MonomialIdeal result = i_colon->parsed() ? colon(lhs, f, bound) : saturate(lhs, f, bound);
                body = result.gens_str() + "\n";
                j = ideal_json(result);
            } else if (i_intersect->parsed()) {
                MonomialIdeal rhs = MonomialIdeal::parse(ideal_texts.at(1));
                const MonomialIdeal result = intersect(lhs, rhs, bound);
                body = result.gens_str() + "\n";
                j = ideal_json(result);
            } else if (i_equal->parsed()) {
                MonomialIdeal rhs = MonomialIdeal::parse(ideal_texts.at(1));
                const BoundedVerdict v = ideal_equal(lhs, rhs, bound);
                body = verdict_table(v, false);
                j = verdict_json(v, false);
            } else if (i_primary->parsed()) {
                const BoundedVerdict v = is_primary(lhs, bound);
                body = verdict_table(v, true);
                j = verdict_json(v, true);
            }
            emit(format == "json" ? j.dump(2) + "\n" : body, out_path);
            return 0;
        }
    } catch (const internal_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
