#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "moncurve/invariants.hpp"

namespace moncurve {

// Two-parameter curve family: exponents {0, b1, b2, a_0, ..., a_n}
// with b1 = r, b2 = 2r - 2 and a_i = 2r + 2i - 1, so d = a_n.
struct FamilyParams {
    int r = 0;
    int n = 0;

    static FamilyParams make(int r, int n) {
        if (r < 5) fail(errc::params_out_of_range, "family parameter r = " + std::to_string(r) + " (need r >= 5)");
        if (n < 1) fail(errc::params_out_of_range, "family parameter n = " + std::to_string(n) + " (need n >= 1)");
        return {r, n};
    }

    int b1() const { return r; }
    int b2() const { return 2 * r - 2; }
    int a(int i) const { return 2 * r + 2 * i - 1; }
    int d() const { return a(n); }

    // The single candidate new algebra generator of the
    // Macaulayfication for non-CM members.
    Monomial expected_new_generator() const {
        return {2LL * d() - 3LL * b1(), 3LL * b1()};
    }
};

inline Curve family_curve(int r, int n) {
    const FamilyParams p = FamilyParams::make(r, n);
    std::vector<long long> exponents{0, p.b1(), p.b2()};
    for (int i = 0; i <= n; ++i) exponents.push_back(p.a(i));
    return Curve::make(p.d(), std::move(exponents));
}

enum class FamilyClass { cm, buchsbaum_1, strictly_2_buchsbaum, unknown };

inline const char* family_class_name(FamilyClass c) {
    switch (c) {
        case FamilyClass::cm: return "CM";
        case FamilyClass::buchsbaum_1: return "Buchsbaum_1";
        case FamilyClass::strictly_2_buchsbaum: return "strictly_2_Buchsbaum";
        case FamilyClass::unknown: return "unknown";
    }
    return "unknown";
}

struct Prediction {
    FamilyClass classification = FamilyClass::unknown;
    std::string source = "none";
    std::optional<Monomial> new_gen;
    bool reg_eq_rq = true;
};

// Classification predicted from the parameters alone.  The regime
// r = 2n + 8 pins strict level 2; inside 2n >= r - 5 the parity of r
// and the size of 2n against r + 1 decide CM versus strict level 1;
// outside both regimes nothing is predicted and computation decides.
inline Prediction predict(int r, int n) {
    const FamilyParams p = FamilyParams::make(r, n);
    Prediction out;
    if (r == 2 * n + 8) {
        out.classification = FamilyClass::strictly_2_buchsbaum;
        out.source = "XZ";
    } else if (2 * n >= r - 5) {
        if (r % 2 == 1 && 2 * n >= r + 1) {
            out.classification = FamilyClass::cm;
            out.source = "XY(i)";
        } else if (r % 2 == 1) {
            out.classification = FamilyClass::buchsbaum_1;
            out.source = "XY(ii)";
        } else {
            out.classification = FamilyClass::buchsbaum_1;
            out.source = "XY(iii)";
        }
    }
    if (out.classification != FamilyClass::cm) out.new_gen = p.expected_new_generator();
    return out;
}

struct VerificationRow {
    int r = 0;
    int n = 0;
    Prediction prediction;
    std::optional<InvariantReport> report;
    bool match = false;
    std::string detail;                    // "ok", "error: ...", or the mismatch list
    std::optional<int> question_residual;  // reg - (k + 2) for strict level k >= 1
};

// Builds the curve, classifies it, and compares against the
// prediction.  Computation failures are recorded on the row; they do
// not escape.
inline VerificationRow verify_one(int r, int n) {
    VerificationRow row{r, n, predict(r, n), std::nullopt, false, "", std::nullopt};
    try {
        const InvariantReport report = classify(family_curve(r, n));
        row.report = report;
        std::vector<std::string> bad;

        switch (row.prediction.classification) {
            case FamilyClass::cm:
                if (!report.is_cm) bad.push_back("predicted CM, computed k = " + std::to_string(report.k));
                break;
            case FamilyClass::buchsbaum_1:
                if (report.k != 1) bad.push_back("predicted strict level 1, computed k = " + std::to_string(report.k));
                break;
            case FamilyClass::strictly_2_buchsbaum:
                if (report.k != 2) bad.push_back("predicted strict level 2, computed k = " + std::to_string(report.k));
                break;
            case FamilyClass::unknown:
                break;
        }

        // every non-CM member has exactly one new generator, the
        // expected one
        if (!report.is_cm) {
            const Monomial want = FamilyParams::make(r, n).expected_new_generator();
            if (report.new_generators.size() != 1 || report.new_generators.front() != want)
                bad.push_back("new generators differ from " + want.str());
        } else if (!report.new_generators.empty()) {
            bad.push_back("CM row carries new generators");
        }

        if (row.prediction.reg_eq_rq && report.reg != report.r_q_r)
            bad.push_back("reg = " + std::to_string(report.reg) + " differs from r_Q = " + std::to_string(report.r_q_r));

        if (report.k >= 1) row.question_residual = report.reg - (report.k + 2);

        row.match = bad.empty();
        if (bad.empty()) {
            row.detail = "ok";
        } else {
            for (std::size_t i = 0; i < bad.size(); ++i) {
                if (i) row.detail += "; ";
                row.detail += bad[i];
            }
        }
    } catch (const std::exception& e) {
        row.match = false;
        row.detail = std::string("error: ") + e.what();
    }
    return row;
}

// Sweep over the rectangle [r_lo, r_hi] x [n_lo, n_hi] in (r, n)
// lexicographic order.  Rows are independent; with jobs > 1 they are
// computed by a small worker pool and merged back in order.
inline std::vector<VerificationRow> verify_family(int r_lo, int r_hi, int n_lo, int n_hi, int jobs = 1) {
    if (r_lo < 5 || r_lo > r_hi) fail(errc::params_out_of_range, "bad r range " + std::to_string(r_lo) + ":" + std::to_string(r_hi) + " (need 5 <= r_lo <= r_hi)");
    if (n_lo < 1 || n_lo > n_hi) fail(errc::params_out_of_range, "bad n range " + std::to_string(n_lo) + ":" + std::to_string(n_hi) + " (need 1 <= n_lo <= n_hi)");

    std::vector<std::pair<int, int>> tasks;
    for (int r = r_lo; r <= r_hi; ++r)
        for (int n = n_lo; n <= n_hi; ++n) tasks.emplace_back(r, n);

    std::vector<std::optional<VerificationRow>> slots(tasks.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = verify_one(tasks[i].first, tasks[i].second);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    slots[i] = verify_one(tasks[i].first, tasks[i].second);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<VerificationRow> rows;
    rows.reserve(tasks.size());
    for (auto& s : slots) rows.push_back(std::move(*s));
    return rows;
}

}  // namespace moncurve
