#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moncurve/curve.hpp"
#include "moncurve/ideal.hpp"

namespace moncurve {

// The Macaulayfication R~ of the curve ring R, held degreewise.
// rtilde[n] are the t-exponents spanning R~_n, extra[n] those of
// R~_n \ R_n (the degree-n piece of the Rao module R~/R), and new_gens
// are the minimal algebra generators of R~ over R.  l is their common
// degree when they all share one; a_invariant is the top degree with
// extra[n] nonempty (absent when R~ = R).
struct Macaulayfication {
    Curve curve;
    int requested_bound;
    std::vector<std::vector<int>> rtilde;
    std::vector<BitVec> rtilde_bits;
    std::vector<std::vector<int>> extra;
    std::vector<BitVec> extra_bits;
    std::vector<Monomial> new_gens;
    std::optional<int> l;
    std::optional<int> a_invariant;

    bool trivial() const { return !a_invariant.has_value(); }
    int top_level() const { return static_cast<int>(rtilde.size()) - 1; }

    // t-exponents of the new generators
    std::vector<int> new_gen_exponents() const {
        std::vector<int> h;
        for (const auto& g : new_gens) h.push_back(static_cast<int>(g.t_exp));
        return h;
    }
};

namespace detail {

// Shared tail of both Macaulayfication algorithms: given the R~ levels
// as bit rows (degree n over [0, n*d]), derive the Rao pieces, check
// the stabilization window, and extract minimal algebra generators.
// A monomial of R~ \ R is decomposable exactly when it splits off a
// degree-1 ring generator against a lower R~ element, or splits as a
// product of two lower R~ \ R elements.
inline Macaulayfication finalize_macaulayfication(const Curve& curve, int requested, std::vector<BitVec> rows) {
    const int d = curve.degree();
    const int top = static_cast<int>(rows.size()) - 1;
    Macaulayfication mac{curve, requested, {}, std::move(rows), {}, {}, {}, std::nullopt, std::nullopt};

    for (int n = 0; n <= top; ++n) {
        const BitVec& row = mac.rtilde_bits[static_cast<std::size_t>(n)];
        BitVec missing = curve.sumset_level(n);
        missing.and_not(row);
        require_internal(!missing.any(), "R_" + std::to_string(n) + " not contained in the section ring piece");
        BitVec extra = row;
        extra.and_not(curve.sumset_level(n));
        mac.rtilde.push_back(row.to_indices());
        mac.extra.push_back(extra.to_indices());
        mac.extra_bits.push_back(std::move(extra));
    }

    const int stab = curve.degree() - curve.mid_count();
    for (int n = stab; n <= top; ++n)
        require_internal(mac.extra[static_cast<std::size_t>(n)].empty(),
                         "section ring differs from R in degree " + std::to_string(n) +
                             " beyond the stabilization bound " + std::to_string(stab));

    for (int n = 1; n <= top; ++n) {
        for (int t : mac.extra[static_cast<std::size_t>(n)]) {
            bool decomposable = false;
            for (int g : curve.exponents()) {
                if (g > t) break;
                if (mac.rtilde_bits[static_cast<std::size_t>(n - 1)].test(t - g)) {
                    decomposable = true;
                    break;
                }
            }
            for (int i = 1; !decomposable && i < n; ++i) {
                for (int s : mac.extra[static_cast<std::size_t>(i)]) {
                    if (s > t) break;
                    if (mac.extra_bits[static_cast<std::size_t>(n - i)].test(t - s)) {
                        decomposable = true;
                        break;
                    }
                }
            }
            if (!decomposable) mac.new_gens.push_back({static_cast<long long>(n) * d - t, t});
        }
        if (!mac.extra[static_cast<std::size_t>(n)].empty()) mac.a_invariant = n;
    }

    if (!mac.new_gens.empty()) {
        int common = curve.monomial_degree(mac.new_gens.front());
        bool uniform = true;
        for (const auto& g : mac.new_gens)
            if (curve.monomial_degree(g) != common) uniform = false;
        if (uniform) mac.l = common;
    }
    require_internal(mac.new_gens.empty() == mac.trivial(), "new generators inconsistent with the Rao pieces");
    return mac;
}

inline int resolve_macaulayfication_bound(const Curve& curve, int requested) {
    int n = requested < 0 ? curve.degree() : requested;
    const int floor_bound = curve.degree() - curve.mid_count();
    if (n < floor_bound)
        fail(errc::bound_too_small, "degree bound " + std::to_string(n) + " below the stabilization bound " + std::to_string(floor_bound));
    return n;
}

}  // namespace detail

// Macaulayfication via the two affine coordinate semigroups: a
// monomial s^(nd-a) t^a belongs to R~_n exactly when a lands in the
// t-side semigroup and nd-a in the s-side one, i.e. when it enters R
// after multiplication by high powers of t^d and of s^d.
inline Macaulayfication macaulayfication_sections(const Curve& curve, int degree_bound = -1) {
    const int n_max = detail::resolve_macaulayfication_bound(curve, degree_bound);
    const int d = curve.degree();
    const int top = n_max + 3;  // slack for reduction-number stability checks
    const long long semigroup_bound = static_cast<long long>(top + 1) * d;
    const AffineSemigroup gamma_t = curve.t_semigroup(semigroup_bound);
    const AffineSemigroup gamma_s = curve.s_semigroup(semigroup_bound);

    std::vector<BitVec> rows;
    rows.reserve(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        const long long nd = static_cast<long long>(n) * d;
        BitVec row(static_cast<int>(nd) + 1);
        for (long long a = 0; a <= nd; ++a)
            if (gamma_t.contains(a) && gamma_s.contains(nd - a)) row.set(static_cast<int>(a));
        rows.push_back(std::move(row));
    }
    return detail::finalize_macaulayfication(curve, n_max, std::move(rows));
}

// Independent second algorithm: R~ = a^{-1} C(a) for a = (s^d)^p,
// where C(a) = (a : (t^d)^infinity) comes from the ideal operations.
// p walks 1, 2, ... until the derived levels stabilize; the scan bound
// carries enough slack that every colon certificate chain stays inside
// the scanned window.
inline Macaulayfication macaulayfication_colon(const Curve& curve, int degree_bound = -1) {
    const int n_max = detail::resolve_macaulayfication_bound(curve, degree_bound);
    const int d = curve.degree();
    const int top = n_max + 3;
    const int slack = curve.degree() - curve.mid_count();  // >= Buchsbaum level
    const int p_cap = slack + 2;

    std::optional<std::vector<BitVec>> previous;
    for (int p = 1; p <= p_cap; ++p) {
        const int scan_bound = top + p + slack;
        MonomialIdeal principal(curve, {Monomial{static_cast<long long>(p) * d, 0}});
        MonomialIdeal sections = saturate(principal, Monomial{0, d}, scan_bound);

        std::vector<BitVec> rows;
        rows.reserve(static_cast<std::size_t>(top) + 1);
        for (int n = 0; n <= top; ++n) {
            const long long nd = static_cast<long long>(n) * d;
            const long long jd = static_cast<long long>(n + p) * d;
            BitVec row(static_cast<int>(nd) + 1);
            for (int a : curve.sumset(n + p)) {
                if (!sections.contains({jd - a, a})) continue;
                require_internal(a <= nd, "C(a) member not divisible by the chosen parameter power");
                row.set(a);
            }
            rows.push_back(std::move(row));
        }
        if (previous && *previous == rows)
            return detail::finalize_macaulayfication(curve, n_max, std::move(rows));
        previous = std::move(rows);
    }
    throw internal_error("colon-based Macaulayfication did not stabilize by p = " + std::to_string(p_cap));
}

namespace detail {

// kG + T(n) contained in (n+k)G for every n?
inline bool level_annihilates(const Macaulayfication& mac, int k) {
    const Curve& curve = mac.curve;
    const auto kg = curve.sumset(k);
    for (int n = 0; n <= mac.top_level(); ++n) {
        for (int t : mac.extra[static_cast<std::size_t>(n)]) {
            const BitVec& target = curve.sumset_level(n + k);
            for (int a : kg)
                if (!target.test(static_cast<long long>(t) + a)) return false;
        }
    }
    return true;
}

}  // namespace detail

// Least k >= 0 with kG + T(n) contained in (n+k)G for all n; testing a
// single k suffices because the condition is monotone in k (0 lies in
// G), which is re-checked at k+1 on every call.
inline int buchsbaum_level(const Macaulayfication& mac) {
    if (mac.trivial()) return 0;
    const int cap = *mac.a_invariant + 1;
    for (int k = 1; k <= cap; ++k) {
        if (detail::level_annihilates(mac, k)) {
            require_internal(detail::level_annihilates(mac, k + 1), "annihilation is not monotone in k");
            return k;
        }
    }
    throw internal_error("Buchsbaum level exceeded a(R~/R) + 1 = " + std::to_string(cap));
}

// Hypothesis gate for the strict-level criterion and the k + l - 1
// identity: with H the t-exponents of the new generators, either
// H + H lies in (2l)G, or H + H lies in lG + H.
inline bool check_level_hypothesis(const Macaulayfication& mac) {
    if (mac.trivial()) return true;  // no new generators, vacuous
    if (!mac.l) fail(errc::l_undefined, "new generators do not share a common degree");
    const Curve& curve = mac.curve;
    const int l = *mac.l;
    const auto h = mac.new_gen_exponents();

    bool first = true;
    const BitVec& two_l = curve.sumset_level(2 * l);
    for (std::size_t i = 0; i < h.size() && first; ++i)
        for (std::size_t j = i; j < h.size(); ++j)
            if (!two_l.test(static_cast<long long>(h[i]) + h[j])) {
                first = false;
                break;
            }
    if (first) return true;

    const BitVec& lg = curve.sumset_level(l);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i; j < h.size(); ++j) {
            const long long sum = static_cast<long long>(h[i]) + h[j];
            bool covered = false;
            for (int t : h)
                if (sum - t >= 0 && lg.test(sum - t)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    return true;
}

struct CriterionResult {
    bool holds = false;
    std::optional<long long> witness;  // element of (kG + G_{R~}) \ (k+l)G on failure
};

// Numerical strict-level criterion: kG + G_{R~} contained in (k+l)G,
// with G_{R~} = lG together with the new-generator exponents.  The
// reverse containment holds automatically and is re-asserted.  Returns
// the smallest violating integer as witness on failure.
inline CriterionResult check_strict_k_criterion(const Macaulayfication& mac, int k) {
    if (k < 0) fail(errc::params_out_of_range, "criterion level k = " + std::to_string(k) + " < 0");
    if (mac.trivial()) return {true, std::nullopt};  // G_{R~} = lG, both sides are (k+l)G
    if (!mac.l) fail(errc::l_undefined, "new generators do not share a common degree");
    if (!check_level_hypothesis(mac)) fail(errc::hypothesis_not_verified, "level hypothesis fails for this curve");

    const Curve& curve = mac.curve;
    const int d = curve.degree();
    const int l = *mac.l;

    std::vector<int> g_tilde = curve.sumset(l);
    for (int t : mac.new_gen_exponents()) g_tilde.push_back(t);
    std::sort(g_tilde.begin(), g_tilde.end());
    g_tilde.erase(std::unique(g_tilde.begin(), g_tilde.end()), g_tilde.end());

    const BitVec& kg = curve.sumset_level(k);
    const BitVec& target = curve.sumset_level(k + l);
    BitVec reached((k + l) * d + 1);
    for (int a : g_tilde) reached.or_shifted(kg, a);

    BitVec missing = target;
    missing.and_not(reached);
    require_internal(!missing.any(), "(k+l)G not contained in kG + G_{R~}");

    BitVec violations = reached;
    violations.and_not(target);
    if (!violations.any()) return {true, std::nullopt};
    return {false, violations.first()};
}

struct RaoModule {
    std::vector<int> dims;             // dim (R~/R)_n for n = 0..a
    std::optional<int> a_invariant;    // absent when R~ = R
};

// Hilbert function of the Rao module R~/R.
inline RaoModule rao_module(const Macaulayfication& mac) {
    if (mac.trivial()) return {{}, std::nullopt};
    RaoModule out;
    out.a_invariant = mac.a_invariant;
    for (int n = 0; n <= *mac.a_invariant; ++n)
        out.dims.push_back(static_cast<int>(mac.extra[static_cast<std::size_t>(n)].size()));
    return out;
}

namespace detail {

inline bool reduction_step_holds(const std::vector<int>& w, const std::vector<int>& w_next, int d) {
    std::vector<int> expected;
    expected.reserve(2 * w.size());
    std::vector<int> shifted;
    shifted.reserve(w.size());
    for (int a : w) shifted.push_back(a + d);
    std::merge(w.begin(), w.end(), shifted.begin(), shifted.end(), std::back_inserter(expected));
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    return expected == w_next;
}

}  // namespace detail

// Reduction number w.r.t. Q = (s^d, t^d): least n with
// W_{n+1} = W_n union (W_n + d).  Once the equality holds it persists,
// which is re-checked on the two following degrees when available.
inline int reduction_number(const std::vector<std::vector<int>>& levels, int d) {
    const int count = static_cast<int>(levels.size());
    for (int n = 0; n + 1 < count; ++n) {
        if (detail::reduction_step_holds(levels[static_cast<std::size_t>(n)], levels[static_cast<std::size_t>(n + 1)], d)) {
            for (int m = n + 1; m + 1 < count && m <= n + 2; ++m)
                require_internal(detail::reduction_step_holds(levels[static_cast<std::size_t>(m)],
                                                              levels[static_cast<std::size_t>(m + 1)], d),
                                 "reduction equality does not persist past degree " + std::to_string(n));
            return n;
        }
    }
    fail(errc::not_stabilized, "no reduction step within " + std::to_string(count) + " levels");
}

inline std::vector<std::vector<int>> ring_levels(const Curve& curve, int top) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) out.push_back(curve.sumset(n));
    return out;
}

struct RegularityResult {
    int value = 0;
    std::string branch;  // "cm", "k_plus_l" or "a_plus_1"
};

// reg(R) = max{k + l, r_Q(R~)} when the level hypothesis holds;
// otherwise the fallback max{a(R~/R) + 1, r_Q(R~)}, flagged by branch.
// The CM case collapses to r_Q(R~).
inline RegularityResult regularity(const Macaulayfication& mac, int k, int r_q_rtilde, bool force_k_plus_l = false) {
    if (mac.trivial()) return {r_q_rtilde, "cm"};
    if (mac.l && check_level_hypothesis(mac)) return {std::max(k + *mac.l, r_q_rtilde), "k_plus_l"};
    if (force_k_plus_l) fail(errc::hypothesis_not_verified, "level hypothesis unavailable, cannot take the k + l branch");
    return {std::max(*mac.a_invariant + 1, r_q_rtilde), "a_plus_1"};
}

struct InvariantReport {
    Curve curve;
    int k = 0;
    bool is_cm = true;
    std::optional<int> l;
    std::optional<int> a_invariant;
    std::vector<int> rao_hilbert;
    int r_q_r = 0;
    int r_q_rtilde = 0;
    int reg = 0;
    std::string formula_branch;
    std::optional<bool> hypothesis_holds;
    std::optional<bool> criterion_checked;
    std::vector<Monomial> new_generators;
};

// Full invariant pipeline for one curve, with every structural
// relation between the computed quantities re-checked; a violation
// throws internal_error rather than producing a report.
inline InvariantReport classify(const Curve& curve, int degree_bound = -1) {
    Macaulayfication mac = macaulayfication_sections(curve, degree_bound);
    const int k = buchsbaum_level(mac);
    const RaoModule rao = rao_module(mac);
    const int top = mac.top_level();

    const int r_q_r = reduction_number(ring_levels(curve, top), curve.degree());
    const int r_q_rtilde = reduction_number(mac.rtilde, curve.degree());

    std::optional<bool> hypothesis;
    if (mac.trivial())
        hypothesis = true;
    else if (mac.l)
        hypothesis = check_level_hypothesis(mac);

    const RegularityResult rr = regularity(mac, k, r_q_rtilde);

    std::optional<bool> criterion;
    if (mac.trivial()) {
        criterion = true;
    } else if (mac.l && hypothesis && *hypothesis) {
        const CriterionResult at_k = check_strict_k_criterion(mac, k);
        const CriterionResult below = check_strict_k_criterion(mac, k - 1);
        criterion = at_k.holds && !below.holds;
        require_internal(*criterion, "strict-level criterion disagrees with the computed level k = " + std::to_string(k));
    }

    require_internal(r_q_rtilde <= r_q_r, "r_Q(R~) exceeds r_Q(R)");
    require_internal(r_q_r <= rr.value, "r_Q(R) exceeds reg(R)");
    require_internal(rr.value <= curve.degree() - curve.mid_count(), "regularity exceeds d minus the intermediate count");
    if (!mac.trivial() && mac.l && hypothesis && *hypothesis)
        require_internal(*mac.a_invariant == k + *mac.l - 1, "a(R~/R) differs from k + l - 1 under the level hypothesis");
    if (curve.smooth()) require_internal(rr.value == k + 1, "smooth curve regularity differs from k + 1");
    require_internal(mac.trivial() == (k == 0), "CM flag and Buchsbaum level disagree");

    return InvariantReport{curve,
                           k,
                           mac.trivial(),
                           mac.l,
                           mac.a_invariant,
                           rao.dims,
                           r_q_r,
                           r_q_rtilde,
                           rr.value,
                           rr.branch,
                           hypothesis,
                           criterion,
                           mac.new_gens};
}

}  // namespace moncurve
