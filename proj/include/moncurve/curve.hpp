#pragma once

#include <algorithm>
#include <charconv>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moncurve/bitvec.hpp"
#include "moncurve/errors.hpp"

namespace moncurve {

// A monomial s^a t^b of K[s,t], kept in collapsed exponent form.  Its
// degree is only defined relative to a curve (total exponent / d).
struct Monomial {
    long long s_exp = 0;
    long long t_exp = 0;

    long long total() const { return s_exp + t_exp; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.s_exp + b.s_exp, a.t_exp + b.t_exp};
    }

    // Exponentwise divisibility in K[s,t]; divisibility inside the
    // curve ring additionally needs the quotient to lie in the ring.
    bool divides(const Monomial& m) const { return s_exp <= m.s_exp && t_exp <= m.t_exp; }

    Monomial quotient_by(const Monomial& v) const { return {s_exp - v.s_exp, t_exp - v.t_exp}; }

    Monomial pow(long long k) const { return {s_exp * k, t_exp * k}; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string str() const {
        return std::to_string(s_exp) + "," + std::to_string(t_exp);
    }
};

// Affine numerical semigroup: all non-negative integer combinations of
// a generator set, with membership tabulated up to a fixed bound.
class AffineSemigroup {
public:
    AffineSemigroup(std::vector<int> generators, long long bound)
        : generators_(std::move(generators)), bound_(bound), member_(static_cast<std::size_t>(bound) + 1, false) {
        std::sort(generators_.begin(), generators_.end());
        generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
        member_[0] = true;
        for (long long x = 1; x <= bound_; ++x) {
            for (int g : generators_) {
                if (g <= 0 || g > x) continue;
                if (member_[static_cast<std::size_t>(x - g)]) {
                    member_[static_cast<std::size_t>(x)] = true;
                    break;
                }
            }
        }
    }

    bool contains(long long x) const {
        if (x > bound_) fail(errc::bound_exceeded, "semigroup membership query " + std::to_string(x) + " exceeds bound " + std::to_string(bound_));
        if (x < 0) return false;
        return member_[static_cast<std::size_t>(x)];
    }

    long long bound() const { return bound_; }
    const std::vector<int>& generators() const { return generators_; }

private:
    std::vector<int> generators_;
    long long bound_;
    std::vector<bool> member_;
};

namespace detail {

// Memoized sumset levels nG, level n stored as bits over [0, n*d].
// Guarded by a mutex so that concurrent fills stay idempotent; levels
// live in a deque and are never mutated once published.
struct SumsetTable {
    std::mutex mu;
    std::deque<BitVec> levels;

    void ensure(int n, int d, const std::vector<int>& exponents) {
        while (static_cast<int>(levels.size()) <= n) {
            const int k = static_cast<int>(levels.size());
            BitVec next(k * d + 1);
            if (k == 0) {
                next.set(0);
            } else {
                const BitVec& prev = levels[static_cast<std::size_t>(k - 1)];
                for (int g : exponents) next.or_shifted(prev, g);
            }
            levels.push_back(std::move(next));
        }
    }
};

inline long long parse_int(std::string_view tok, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(errc::parse_error, std::string("bad ") + what + " token '" + std::string(tok) + "'");
    return value;
}

}  // namespace detail

// A projective monomial curve, represented by its common generator
// degree d and the strictly increasing exponent set G with 0, d in G
// and gcd(G \ {0}) = 1.  Immutable after construction; the sumset
// cache is shared between copies and safe to use from several threads.
class Curve {
public:
    // When add_endpoints is set, 0 and d are inserted for callers that
    // pass only the intermediate exponents.
    static Curve make(int d, std::vector<long long> exponents, bool add_endpoints = false) {
        if (d < 1) fail(errc::degenerate_degree, "degree d = " + std::to_string(d) + " (need d >= 1)");
        for (long long e : exponents)
            if (e < 0 || e > d)
                fail(errc::out_of_range, "exponent " + std::to_string(e) + " outside [0, " + std::to_string(d) + "]");
        std::vector<int> g(exponents.begin(), exponents.end());
        if (add_endpoints) {
            g.push_back(0);
            g.push_back(d);
        }
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        if (g.empty() || g.front() != 0 || g.back() != d)
            fail(errc::invalid_exponents, "exponent set must contain both 0 and d");
        if (g.size() < 2) fail(errc::invalid_exponents, "need at least two exponents");
        int acc = 0;
        for (int e : g)
            if (e != 0) acc = std::gcd(acc, e);
        if (acc != 1)
            fail(errc::non_coprime, "gcd of nonzero exponents is " + std::to_string(acc) + ", not 1");
        return Curve(d, std::move(g));
    }

    // Text form "d:g1,g2,...,gk", e.g. "21:0,10,18,19,21".
    static Curve parse(std::string_view text) {
        auto colon = text.find(':');
        if (colon == std::string_view::npos) fail(errc::parse_error, "curve '" + std::string(text) + "' lacks ':'");
        long long d = detail::parse_int(text.substr(0, colon), "degree");
        std::vector<long long> exps;
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            exps.push_back(detail::parse_int(tok, "exponent"));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (d < 1) fail(errc::degenerate_degree, "degree d = " + std::to_string(d) + " (need d >= 1)");
        return make(static_cast<int>(d), std::move(exps));
    }

    int degree() const { return d_; }
    const std::vector<int>& exponents() const { return exponents_; }
    int mid_count() const { return static_cast<int>(exponents_.size()) - 2; }

    bool smooth() const {
        return d_ >= 2 && std::binary_search(exponents_.begin(), exponents_.end(), 1) &&
               std::binary_search(exponents_.begin(), exponents_.end(), d_ - 1);
    }

    std::string str() const {
        std::string out = std::to_string(d_) + ":";
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(exponents_[i]);
        }
        return out;
    }

    // nG as a bit set over [0, n*d]; the reference stays valid for the
    // lifetime of the cache.
    const BitVec& sumset_level(int n) const {
        if (n < 0) fail(errc::out_of_range, "sumset level " + std::to_string(n) + " < 0");
        std::lock_guard<std::mutex> lock(table_->mu);
        table_->ensure(n, d_, exponents_);
        return table_->levels[static_cast<std::size_t>(n)];
    }

    std::vector<int> sumset(int n) const { return sumset_level(n).to_indices(); }

    // Degree of a monomial of K[s,t] relative to this curve.
    int monomial_degree(const Monomial& m) const {
        if (m.s_exp < 0 || m.t_exp < 0) fail(errc::not_graded, "monomial " + m.str() + " has a negative exponent");
        long long total = m.total();
        if (total % d_ != 0)
            fail(errc::not_graded, "monomial " + m.str() + " has total exponent " + std::to_string(total) + " not divisible by d = " + std::to_string(d_));
        return static_cast<int>(total / d_);
    }

    // Ring membership: the t-exponent must lie in the degree's sumset.
    bool contains(const Monomial& m) const {
        int n = monomial_degree(m);
        return sumset_level(n).test(m.t_exp);
    }

    // Monomials spanning the degree-n graded piece.
    std::vector<Monomial> graded_piece(int n) const {
        std::vector<Monomial> out;
        long long nd = static_cast<long long>(n) * d_;
        for (int a : sumset(n)) out.push_back({nd - a, a});
        return out;
    }

    // A multiset of degree-1 generator t-exponents summing to m's
    // t-exponent, or nullopt when m is not in the ring.  Walks the
    // sumset levels smallest generator first; any valid witness is
    // acceptable and the particular choice is not stable across
    // versions.
    std::optional<std::vector<int>> decompose(const Monomial& m) const {
        int n = monomial_degree(m);
        if (!sumset_level(n).test(m.t_exp)) return std::nullopt;
        std::vector<int> parts;
        long long rest = m.t_exp;
        for (int j = n; j >= 1; --j) {
            bool found = false;
            for (int g : exponents_) {
                if (g > rest) break;
                if (sumset_level(j - 1).test(rest - g)) {
                    parts.push_back(g);
                    rest -= g;
                    found = true;
                    break;
                }
            }
            require_internal(found, "witness walk stuck at level " + std::to_string(j));
        }
        require_internal(rest == 0, "witness does not sum to the t-exponent");
        return parts;
    }

    // t-side affine coordinate semigroup <G \ {0}>.
    AffineSemigroup t_semigroup(long long bound) const {
        std::vector<int> gens(exponents_.begin() + 1, exponents_.end());
        return AffineSemigroup(std::move(gens), bound);
    }

    // s-side affine coordinate semigroup <d - g : g in G, g != d>.
    AffineSemigroup s_semigroup(long long bound) const {
        std::vector<int> gens;
        for (int g : exponents_)
            if (g != d_) gens.push_back(d_ - g);
        return AffineSemigroup(std::move(gens), bound);
    }

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.d_ == b.d_ && a.exponents_ == b.exponents_;
    }

private:
    Curve(int d, std::vector<int> exponents)
        : d_(d), exponents_(std::move(exponents)), table_(std::make_shared<detail::SumsetTable>()) {}

    int d_;
    std::vector<int> exponents_;
    std::shared_ptr<detail::SumsetTable> table_;
};

// Degree bound used by the bounded ideal operations when the caller
// does not pick one: max(8, (d - mid_count) + 3), where d - mid_count
// dominates the regularity of the curve.
inline int default_degree_bound(const Curve& curve) {
    return std::max(8, curve.degree() - curve.mid_count() + 3);
}

}  // namespace moncurve
