#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moncurve/curve.hpp"
#include "moncurve/errors.hpp"

namespace moncurve {

// Outcome of a degreewise-bounded check.  The bound is part of the
// answer: holds means "holds for every degree up to bound", fails
// carries a re-checkable counterexample (a separating monomial, or the
// violating pair for the primary test).
struct BoundedVerdict {
    bool holds = true;
    int bound = 0;
    std::vector<Monomial> counterexample;
    std::string note;

    explicit operator bool() const { return holds; }
};

// Monomial ideal inside the curve ring, kept as its minimal generator
// list sorted by (degree, t-exponent).  Construction validates that
// every generator lies in the ring and drops redundant generators.
class MonomialIdeal {
public:
    MonomialIdeal(Curve curve, std::vector<Monomial> generators, std::optional<int> computed_bound = std::nullopt)
        : curve_(std::move(curve)), bound_(computed_bound) {
        for (const auto& g : generators)
            if (!curve_.contains(g))
                fail(errc::not_in_ring, "generator " + g.str() + " is not a monomial of the ring");
        std::sort(generators.begin(), generators.end(), [&](const Monomial& a, const Monomial& b) {
            auto da = curve_.monomial_degree(a), db = curve_.monomial_degree(b);
            return da != db ? da < db : a.t_exp < b.t_exp;
        });
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        for (const auto& g : generators)
            if (!divisible_by_any(gens_, g)) gens_.push_back(g);
    }

    // Text form "<curve>|A,B;A,B;..." with each generator s^A t^B.
    static MonomialIdeal parse(std::string_view text) {
        auto bar = text.find('|');
        if (bar == std::string_view::npos) fail(errc::parse_error, "ideal '" + std::string(text) + "' lacks '|'");
        Curve curve = Curve::parse(text.substr(0, bar));
        std::vector<Monomial> gens;
        std::string_view rest = text.substr(bar + 1);
        while (!rest.empty()) {
            auto semi = rest.find(';');
            std::string_view tok = rest.substr(0, semi);
            auto comma = tok.find(',');
            if (comma == std::string_view::npos)
                fail(errc::parse_error, "generator '" + std::string(tok) + "' is not of the form A,B");
            Monomial m{detail::parse_int(tok.substr(0, comma), "s-exponent"),
                       detail::parse_int(tok.substr(comma + 1), "t-exponent")};
            gens.push_back(m);
            if (semi == std::string_view::npos) break;
            rest = rest.substr(semi + 1);
        }
        if (gens.empty()) fail(errc::parse_error, "ideal needs at least one generator");
        return MonomialIdeal(std::move(curve), std::move(gens));
    }

    const Curve& curve() const { return curve_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::optional<int> computed_bound() const { return bound_; }

    int max_generator_degree() const {
        int m = 0;
        for (const auto& g : gens_) m = std::max(m, curve_.monomial_degree(g));
        return m;
    }

    // Exact membership: some generator divides m with quotient in the
    // ring.  Not bounded.
    bool contains(const Monomial& m) const {
        curve_.monomial_degree(m);  // rejects non-graded input
        return divisible_by_any(gens_, m);
    }

    std::string gens_str() const {
        std::string out;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ';';
            out += gens_[i].str();
        }
        return out;
    }

    std::string str() const { return curve_.str() + "|" + gens_str(); }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.curve_ == b.curve_ && a.gens_ == b.gens_;
    }

private:
    bool divisible_by_any(const std::vector<Monomial>& vs, const Monomial& m) const {
        for (const auto& v : vs)
            if (v.divides(m) && curve_.contains(m.quotient_by(v))) return true;
        return false;
    }

    Curve curve_;
    std::vector<Monomial> gens_;
    std::optional<int> bound_;
};

namespace detail {

inline void check_same_curve(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.curve() == b.curve()))
        fail(errc::curve_mismatch, "ideals live over different curves: " + a.curve().str() + " vs " + b.curve().str());
}

inline void check_bound(const MonomialIdeal& ideal, int degree_bound) {
    int need = ideal.max_generator_degree();
    if (degree_bound < need)
        fail(errc::bound_too_small, "degree bound " + std::to_string(degree_bound) + " below generator degree " + std::to_string(need));
}

// Scans the ring monomials degree by degree (t-exponent ascending
// within a degree), keeping exactly the members that are not divisible
// by an already kept one.  Valid whenever the membership predicate
// defines an ideal; the kept list is then its minimal generator set up
// to degree_bound.
template <typename MemberFn>
std::vector<Monomial> minimal_generators_upto(const Curve& curve, int degree_bound, MemberFn&& member) {
    std::vector<Monomial> kept;
    auto redundant = [&](const Monomial& m) {
        for (const auto& v : kept)
            if (v.divides(m) && curve.contains(m.quotient_by(v))) return true;
        return false;
    };
    for (int j = 0; j <= degree_bound; ++j) {
        long long jd = static_cast<long long>(j) * curve.degree();
        for (int a : curve.sumset(j)) {
            Monomial u{jd - a, a};
            if (redundant(u)) continue;
            if (member(u)) kept.push_back(u);
        }
    }
    return kept;
}

}  // namespace detail

// (I : f), minimal generators up to degree_bound.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f, int degree_bound) {
    if (!ideal.curve().contains(f))
        fail(errc::not_in_ring, "colon divisor " + f.str() + " is not a monomial of the ring");
    detail::check_bound(ideal, degree_bound);
    auto gens = detail::minimal_generators_upto(ideal.curve(), degree_bound,
                                                [&](const Monomial& u) { return ideal.contains(u * f); });
    return MonomialIdeal(ideal.curve(), std::move(gens), degree_bound);
}

// (I : f^infinity) as the fixpoint of iterated colon at the given
// bound.  Membership grows monotonically, so equal generator lists
// mean the computed iteration has stabilized.
inline MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& f, int degree_bound) {
    MonomialIdeal current = colon(ideal, f, degree_bound);
    for (;;) {
        MonomialIdeal next = colon(current, f, degree_bound);
        if (next.gens() == current.gens()) return next;
        current = std::move(next);
    }
}

// Minimal generators (up to degree_bound) of I ∩ J.
inline MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs, int degree_bound) {
    detail::check_same_curve(lhs, rhs);
    detail::check_bound(lhs, degree_bound);
    detail::check_bound(rhs, degree_bound);
    auto gens = detail::minimal_generators_upto(lhs.curve(), degree_bound,
                                                [&](const Monomial& u) { return lhs.contains(u) && rhs.contains(u); });
    return MonomialIdeal(lhs.curve(), std::move(gens), degree_bound);
}

// Degreewise membership comparison up to degree_bound; a failure
// carries the first separating monomial in (degree, t-exponent) order.
inline BoundedVerdict ideal_equal(const MonomialIdeal& lhs, const MonomialIdeal& rhs, int degree_bound) {
    detail::check_same_curve(lhs, rhs);
    const Curve& curve = lhs.curve();
    for (int j = 0; j <= degree_bound; ++j) {
        long long jd = static_cast<long long>(j) * curve.degree();
        for (int a : curve.sumset(j)) {
            Monomial u{jd - a, a};
            if (lhs.contains(u) != rhs.contains(u))
                return {false, degree_bound, {u}, "membership differs in degree " + std::to_string(j)};
        }
    }
    return {true, degree_bound, {}, ""};
}

// Bounded primary test: over all monomial pairs with deg f + deg g <=
// degree_bound, whenever f*g lies in the ideal and f does not, some
// power g^k (k <= degree_bound * d) must lie in it.  An exhausted
// power search counts as a failure and is noted on the verdict.
inline BoundedVerdict is_primary(const MonomialIdeal& ideal, int degree_bound) {
    const Curve& curve = ideal.curve();
    const int d = curve.degree();
    const long long power_cap = static_cast<long long>(degree_bound) * d;

    // power-search results are independent of f, so cache them per g
    std::map<Monomial, bool> has_power;
    auto some_power_in = [&](const Monomial& g) {
        auto it = has_power.find(g);
        if (it != has_power.end()) return it->second;
        bool found = false;
        for (long long k = 1; k <= power_cap; ++k) {
            if (ideal.contains(g.pow(k))) {
                found = true;
                break;
            }
        }
        has_power.emplace(g, found);
        return found;
    };

    for (int total = 2; total <= degree_bound; ++total) {
        for (int deg_f = 1; deg_f < total; ++deg_f) {
            const int deg_g = total - deg_f;
            for (int af : curve.sumset(deg_f)) {
                Monomial f{static_cast<long long>(deg_f) * d - af, af};
                if (ideal.contains(f)) continue;
                for (int ag : curve.sumset(deg_g)) {
                    Monomial g{static_cast<long long>(deg_g) * d - ag, ag};
                    if (!ideal.contains(f * g)) continue;
                    if (!some_power_in(g))
                        return {false, degree_bound,
                                {f, g},
                                "f*g in ideal, f not, and no power g^k for k <= " + std::to_string(power_cap)};
                }
            }
        }
    }
    return {true, degree_bound, {}, ""};
}

}  // namespace moncurve
