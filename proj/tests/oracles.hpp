// Brute-force oracles and random instance generators used by the test
// and acceptance suites.  The oracles stay independent of the library
// code paths they check: sumsets are enumerated as explicit tuples,
// ideal membership is built by expanding generators degree by degree.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <moncurve/moncurve.hpp>

namespace oracle {

inline void sums_rec(const std::vector<int>& g, std::size_t idx, int remaining, long long sum,
                     std::set<long long>& out) {
    if (remaining == 0) {
        out.insert(sum);
        return;
    }
    for (std::size_t i = idx; i < g.size(); ++i) sums_rec(g, i, remaining - 1, sum + g[i], out);
}

// All sums of exactly n elements of G, by combination enumeration.
inline std::set<long long> naive_sumset(const std::vector<int>& g, int n) {
    std::set<long long> out;
    sums_rec(g, 0, n, 0, out);
    return out;
}

// Degreewise ideal member sets built forward: every member is a
// generator times a ring monomial of the complementary degree.
// members[j][a] says whether s^(jd-a) t^a lies in the ideal.
class NaiveMembers {
public:
    NaiveMembers(const moncurve::MonomialIdeal& ideal, int bound) : ideal_(&ideal) { extend(bound); }

    bool contains(const moncurve::Monomial& m) {
        const auto& curve = ideal_->curve();
        int j = curve.monomial_degree(m);
        extend(j);
        const auto& row = flags_[static_cast<std::size_t>(j)];
        return m.t_exp < static_cast<long long>(row.size()) && row[static_cast<std::size_t>(m.t_exp)];
    }

    void extend(int bound) {
        const auto& curve = ideal_->curve();
        const int d = curve.degree();
        for (int j = static_cast<int>(flags_.size()); j <= bound; ++j) {
            std::vector<char> row(static_cast<std::size_t>(j) * d + 1, 0);
            for (const auto& gen : ideal_->gens()) {
                const int dg = curve.monomial_degree(gen);
                if (dg > j) continue;
                for (int b : curve.sumset(j - dg)) row[static_cast<std::size_t>(gen.t_exp + b)] = 1;
            }
            flags_.push_back(std::move(row));
        }
    }

private:
    const moncurve::MonomialIdeal* ideal_;
    std::vector<std::vector<char>> flags_;
};

// Member t-exponent sets of (I : f^m), each m computed directly from
// the base ideal (no iteration): u is a member iff u * f^m is.
inline std::vector<std::set<int>> naive_colon_power_members(NaiveMembers& base, const moncurve::Curve& curve,
                                                            const moncurve::Monomial& f, long long m, int bound) {
    std::vector<std::set<int>> out(static_cast<std::size_t>(bound) + 1);
    const int d = curve.degree();
    const int df = curve.monomial_degree(f);
    for (int j = 0; j <= bound; ++j) {
        for (int a : curve.sumset(j)) {
            moncurve::Monomial u{static_cast<long long>(j) * d - a, a};
            moncurve::Monomial shifted{u.s_exp + m * f.s_exp, u.t_exp + m * f.t_exp};
            (void)df;
            if (base.contains(shifted)) out[static_cast<std::size_t>(j)].insert(a);
        }
    }
    return out;
}

// Fixpoint of the bounded colon iteration, mirrored with set-based
// membership and no generator arithmetic: S_{m+1} keeps the monomials
// u with u*f divisible by some member of S_m (ring quotient), until
// the member sets stop changing.  flags[j][a] marks s^(jd-a) t^a.
inline std::vector<std::vector<char>> naive_bounded_saturate(const moncurve::MonomialIdeal& ideal,
                                                             const moncurve::Monomial& f, int bound) {
    const auto& curve = ideal.curve();
    const int d = curve.degree();
    NaiveMembers base(ideal, bound);

    std::vector<std::vector<char>> current(static_cast<std::size_t>(bound) + 1);
    for (int j = 0; j <= bound; ++j) {
        current[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(j) * d + 1, 0);
        for (int a : curve.sumset(j))
            if (base.contains({static_cast<long long>(j) * d - a, a}))
                current[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] = 1;
    }

    for (;;) {
        std::vector<moncurve::Monomial> members;
        for (int j = 0; j <= bound; ++j)
            for (int a : curve.sumset(j))
                if (current[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)])
                    members.push_back({static_cast<long long>(j) * d - a, a});

        std::vector<std::vector<char>> next = current;
        for (int j = 0; j <= bound; ++j) {
            for (int a : curve.sumset(j)) {
                if (next[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)]) continue;
                const moncurve::Monomial uf{static_cast<long long>(j) * d - a + f.s_exp, a + f.t_exp};
                for (const auto& w : members) {
                    if (w.divides(uf) && curve.contains(uf.quotient_by(w))) {
                        next[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] = 1;
                        break;
                    }
                }
            }
        }
        if (next == current) return current;
        current = std::move(next);
    }
}

inline moncurve::Curve random_curve(std::mt19937& rng, int d_min, int d_max, int max_mids = 6) {
    for (;;) {
        const int d = std::uniform_int_distribution<int>(d_min, d_max)(rng);
        const int cap = std::min(max_mids, d - 1);
        const int m = cap > 0 ? std::uniform_int_distribution<int>(0, cap)(rng) : 0;
        std::set<long long> mids;
        if (d > 1) {
            std::uniform_int_distribution<int> pick(1, d - 1);
            while (static_cast<int>(mids.size()) < m) mids.insert(pick(rng));
        }
        std::vector<long long> exps(mids.begin(), mids.end());
        exps.push_back(0);
        exps.push_back(d);
        try {
            return moncurve::Curve::make(d, std::move(exps));
        } catch (const moncurve::error&) {
            // gcd condition failed, draw again
        }
    }
}

inline moncurve::Curve random_smooth_curve(std::mt19937& rng, int d_min = 3, int d_max = 30, int max_mids = 4) {
    const int d = std::uniform_int_distribution<int>(d_min, d_max)(rng);
    std::set<long long> mids{1, static_cast<long long>(d) - 1};
    const int extra = std::uniform_int_distribution<int>(0, std::min(max_mids, d - 1))(rng);
    std::uniform_int_distribution<int> pick(1, d - 1);
    for (int i = 0; i < extra; ++i) mids.insert(pick(rng));
    std::vector<long long> exps(mids.begin(), mids.end());
    exps.push_back(0);
    exps.push_back(d);
    return moncurve::Curve::make(d, std::move(exps));
}

inline moncurve::MonomialIdeal random_ideal(std::mt19937& rng, const moncurve::Curve& curve, int max_gens = 3,
                                            int max_deg = 3) {
    const int count = std::uniform_int_distribution<int>(1, max_gens)(rng);
    std::vector<moncurve::Monomial> gens;
    for (int i = 0; i < count; ++i) {
        const int deg = std::uniform_int_distribution<int>(1, max_deg)(rng);
        const auto piece = curve.sumset(deg);
        const auto idx = std::uniform_int_distribution<std::size_t>(0, piece.size() - 1)(rng);
        gens.push_back({static_cast<long long>(deg) * curve.degree() - piece[idx], piece[idx]});
    }
    return moncurve::MonomialIdeal(curve, std::move(gens));
}

}  // namespace oracle
