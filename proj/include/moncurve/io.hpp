#pragma once

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "moncurve/family.hpp"
#include "moncurve/invariants.hpp"

namespace moncurve {

using json = nlohmann::ordered_json;

namespace detail {

inline json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
inline json optional_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

inline json monomials_to_json(const std::vector<Monomial>& ms) {
    json arr = json::array();
    for (const auto& m : ms) arr.push_back(json::array({m.s_exp, m.t_exp}));
    return arr;
}

// one CSV field, quoted when it contains a comma or quote
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string join_exponents(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace detail

// Flat report object; key order is fixed so identical inputs give
// byte-identical output.
inline json report_to_json(const InvariantReport& rep) {
    json j;
    j["curve"] = rep.curve.str();
    j["d"] = rep.curve.degree();
    j["G"] = rep.curve.exponents();
    j["k"] = rep.k;
    j["l"] = detail::optional_int(rep.l);
    j["a_invariant"] = detail::optional_int(rep.a_invariant);
    j["rao_hilbert"] = rep.rao_hilbert;
    j["r_Q_R"] = rep.r_q_r;
    j["r_Q_Rtilde"] = rep.r_q_rtilde;
    j["reg"] = rep.reg;
    j["is_CM"] = rep.is_cm;
    j["new_generators"] = detail::monomials_to_json(rep.new_generators);
    j["formula_branch"] = rep.formula_branch;
    j["hypothesis_holds"] = detail::optional_bool(rep.hypothesis_holds);
    j["criterion_checked"] = detail::optional_bool(rep.criterion_checked);
    return j;
}

inline std::string monomial_list_str(const std::vector<Monomial>& ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ' ';
        out += "(" + ms[i].str() + ")";
    }
    return out;
}

// Human-readable key/value block.  The Rao Hilbert function is cut off
// past degree 12 here; the JSON form is always complete.
inline std::string report_to_table(const InvariantReport& rep) {
    std::ostringstream os;
    auto line = [&os](const std::string& key, const std::string& value) {
        os << "  " << key;
        for (std::size_t i = key.size(); i < 18; ++i) os << ' ';
        os << value << '\n';
    };
    os << "curve " << rep.curve.str() << '\n';
    line("k", std::to_string(rep.k));
    line("is_CM", rep.is_cm ? "true" : "false");
    line("l", rep.l ? std::to_string(*rep.l) : "-");
    line("a(R~/R)", rep.a_invariant ? std::to_string(*rep.a_invariant) : "-inf");
    std::string rao;
    for (std::size_t i = 0; i < rep.rao_hilbert.size(); ++i) {
        if (i > 12) {
            rao += ",...";
            break;
        }
        if (i) rao += ',';
        rao += std::to_string(rep.rao_hilbert[i]);
    }
    line("rao_hilbert", rao.empty() ? "0" : rao);
    line("r_Q(R)", std::to_string(rep.r_q_r));
    line("r_Q(R~)", std::to_string(rep.r_q_rtilde));
    line("reg", std::to_string(rep.reg));
    line("new_generators", rep.new_generators.empty() ? "-" : monomial_list_str(rep.new_generators));
    line("formula_branch", rep.formula_branch);
    line("hypothesis_holds", rep.hypothesis_holds ? (*rep.hypothesis_holds ? "true" : "false") : "-");
    line("criterion_checked", rep.criterion_checked ? (*rep.criterion_checked ? "true" : "false") : "-");
    return os.str();
}

inline std::string sweep_csv_header() {
    return "r,n,d,G,k,l,a_invariant,r_Q_R,r_Q_Rtilde,reg,is_CM,new_gens,prediction,prediction_source,match,question_residual";
}

inline std::string row_to_csv(const VerificationRow& row) {
    std::ostringstream os;
    os << row.r << ',' << row.n << ',';
    if (row.report) {
        const InvariantReport& rep = *row.report;
        os << rep.curve.degree() << ',';
        os << detail::csv_field(detail::join_exponents(rep.curve.exponents())) << ',';
        os << rep.k << ',';
        os << (rep.l ? std::to_string(*rep.l) : "") << ',';
        os << (rep.a_invariant ? std::to_string(*rep.a_invariant) : "-inf") << ',';
        os << rep.r_q_r << ',' << rep.r_q_rtilde << ',' << rep.reg << ',';
        os << (rep.is_cm ? "true" : "false") << ',';
        os << detail::csv_field(monomial_list_str(rep.new_generators)) << ',';
    } else {
        os << ",,,,,,,,,,";
    }
    os << family_class_name(row.prediction.classification) << ',';
    os << row.prediction.source << ',';
    os << (row.report ? (row.match ? "true" : "false") : "error") << ',';
    if (row.question_residual) os << *row.question_residual;
    return os.str();
}

inline json row_to_json(const VerificationRow& row) {
    json j;
    j["r"] = row.r;
    j["n"] = row.n;
    j["prediction"] = family_class_name(row.prediction.classification);
    j["prediction_source"] = row.prediction.source;
    if (row.prediction.new_gen)
        j["predicted_new_gen"] = json::array({row.prediction.new_gen->s_exp, row.prediction.new_gen->t_exp});
    else
        j["predicted_new_gen"] = nullptr;
    j["match"] = row.report ? json(row.match) : json("error");
    j["detail"] = row.detail;
    j["question_residual"] = detail::optional_int(row.question_residual);
    j["report"] = row.report ? report_to_json(*row.report) : json(nullptr);
    return j;
}

inline std::string row_to_table(const VerificationRow& row) {
    std::ostringstream os;
    os << "family r=" << row.r << " n=" << row.n
       << " prediction=" << family_class_name(row.prediction.classification)
       << " (" << row.prediction.source << ")";
    if (row.report) {
        const InvariantReport& rep = *row.report;
        os << " computed: k=" << rep.k << " reg=" << rep.reg << " r_Q=" << rep.r_q_r
           << " CM=" << (rep.is_cm ? "true" : "false");
        if (!rep.new_generators.empty()) os << " new_gens=" << monomial_list_str(rep.new_generators);
        if (row.question_residual) os << " residual=" << *row.question_residual;
        os << " match=" << (row.match ? "true" : "false");
        if (!row.match) os << " [" << row.detail << "]";
    } else {
        os << " " << row.detail;
    }
    os << '\n';
    return os.str();
}

struct SweepSummary {
    int rows = 0;
    int matched = 0;
    int mismatched = 0;
    int errors = 0;
    std::map<int, int> residuals;
};

inline SweepSummary summarize(const std::vector<VerificationRow>& rows) {
    SweepSummary s;
    s.rows = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        if (!row.report)
            ++s.errors;
        else if (row.match)
            ++s.matched;
        else
            ++s.mismatched;
        if (row.question_residual) ++s.residuals[*row.question_residual];
    }
    return s;
}

inline std::string summary_line(const SweepSummary& s) {
    std::ostringstream os;
    os << "rows=" << s.rows << " matched=" << s.matched << " mismatched=" << s.mismatched
       << " errors=" << s.errors << " question_residual={";
    bool first = true;
    for (const auto& [residual, count] : s.residuals) {
        if (!first) os << ',';
        os << residual << ":" << count;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace moncurve
