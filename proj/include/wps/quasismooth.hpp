#pragma once

#include <optional>
#include <vector>

#include "wps/groebner.hpp"
#include "wps/polynomial.hpp"

namespace wps {

/// Evidence gathered while checking Fletcher's criterion for one variable
/// subset I: either a degree-d monomial supported in I, or |I| distinct
/// indices e with a degree-d monomial of the form (monomial in x_I) * x_e.
struct SubsetEvidence {
    std::vector<int> subset;
    std::optional<ExponentVector> monomial;                  // condition (2a)
    std::vector<std::pair<int, ExponentVector>> matched;     // condition (2b)
};

struct FletcherVerdict {
    bool general_quasismooth = false;
    std::optional<int> degree_variable;   // condition (1) witness
    std::vector<SubsetEvidence> evidence; // per-subset witnesses for (2)
    std::vector<int> failing_subset;      // nonempty iff verdict is false
};

namespace detail {

/// First solution of sum_{i in I} a_i m_i = target with m_i >= 0, exponents
/// chosen greedily from the front; nullopt when insolvable.
inline std::optional<std::vector<long long>> solve_weighted_sum(
    const std::vector<long long>& weights, long long target) {
    std::vector<long long> m(weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, long long rest) -> bool {
        if (k + 1 == weights.size()) {
            if (rest % weights[k] == 0) {
                m[k] = rest / weights[k];
                return true;
            }
            return false;
        }
        for (long long e = 0; e * weights[k] <= rest; ++e) {
            m[k] = e;
            if (self(self, k + 1, rest - e * weights[k])) return true;
        }
        m[k] = 0;
        return false;
    };
    if (weights.empty()) return target == 0 ? std::make_optional(m) : std::nullopt;
    if (rec(rec, 0, target)) return m;
    return std::nullopt;
}

}  // namespace detail

/// Fletcher's combinatorial quasismoothness criterion for the general
/// degree-d hypersurface: either some variable has degree d, or every
/// nonempty subset I of the variables admits (a) a degree-d monomial
/// supported in I, or (b) |I| monomials (monomial in x_I) * x_e with
/// pairwise distinct e. The e range over all of {0..n}; since feasibility
/// does not depend on the slot, the matching exists iff at least |I|
/// indices are feasible.
inline FletcherVerdict fletcher_general(const WeightedSpace& X, long long d) {
    FletcherVerdict verdict;
    const int m = X.var_count();
    for (int i = 0; i < m; ++i)
        if (X.weight(i) == d) {
            verdict.general_quasismooth = true;
            verdict.degree_variable = i;
            return verdict;
        }

    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        SubsetEvidence ev;
        std::vector<long long> sub_weights;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                ev.subset.push_back(i);
                sub_weights.push_back(X.weight(i));
            }
        auto expand = [&](const std::vector<long long>& packed) {
            ExponentVector full(m, 0);
            for (std::size_t k = 0; k < ev.subset.size(); ++k)
                full[ev.subset[k]] = packed[k];
            return full;
        };

        if (auto sol = detail::solve_weighted_sum(sub_weights, d)) {
            ev.monomial = expand(*sol);
            verdict.evidence.push_back(std::move(ev));
            continue;
        }
        const std::size_t k = ev.subset.size();
        for (int e = 0; e < m && ev.matched.size() < k; ++e) {
            if (d - X.weight(e) < 0) continue;
            if (auto sol = detail::solve_weighted_sum(sub_weights, d - X.weight(e))) {
                ExponentVector mono = expand(*sol);
                mono[e] += 1;
                ev.matched.emplace_back(e, std::move(mono));
            }
        }
        if (ev.matched.size() < k) {
            verdict.general_quasismooth = false;
            verdict.failing_subset = ev.subset;
            verdict.evidence.push_back(std::move(ev));
            return verdict;
        }
        verdict.evidence.push_back(std::move(ev));
    }
    verdict.general_quasismooth = true;
    return verdict;
}

/// Quasismoothness of the explicit hypersurface V(f): the common zero locus
/// of all partial derivatives is the origin alone. (f itself is omitted: by
/// the weighted Euler identity it lies in the ideal of its partials.)
inline bool is_quasismooth(const WeightedPolynomial& f,
                           const gb::Limits& limits = {}) {
    if (f.is_zero())
        throw Error(ErrorCode::ZeroPolynomial,
                    "quasismoothness of the zero polynomial is undefined");
    std::vector<WeightedPolynomial> partials;
    for (int i = 0; i < f.space().var_count(); ++i)
        partials.push_back(f.partial_derivative(i));
    return gb::cone_is_origin_only(partials, limits);
}

namespace detail {

inline long long mod_pow(long long base, long long exp, long long p) {
    long long r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

inline bool is_small_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline long long coeff_mod_p(const Rational& c, long long p) {
    const Integer num = numerator(c) % p;
    const Integer den = denominator(c) % p;
    long long n = static_cast<long long>(num);
    long long d = static_cast<long long>(den);
    if (n < 0) n += p;
    if (d == 0)
        throw Error(ErrorCode::BadPrime,
                    "coefficient denominator divisible by p = " +
                        std::to_string(p));
    return n * mod_pow(d, p - 2, p) % p;
}

}  // namespace detail

/// Exhaustive search for a common zero of gens over F_p, optionally
/// restricted to nonzero tuples. Independent test oracle for the Groebner
/// path; reduction mod p may create spurious zeros, so only the direction
/// documented in the tests is binding.
inline bool finite_field_common_zero(const std::vector<WeightedPolynomial>& gens,
                                     long long p, bool nonzero_only = true) {
    if (!detail::is_small_prime(p) || p > 64)
        throw Error(ErrorCode::BadPrime,
                    std::to_string(p) + " is not a prime <= 64");
    if (gens.empty()) return false;
    const int nvars = gens.front().space().var_count();

    struct ModPoly {
        std::vector<std::pair<ExponentVector, long long>> terms;
    };
    std::vector<ModPoly> reduced;
    long long max_exp = 1;
    for (const WeightedPolynomial& g : gens) {
        ModPoly mp;
        for (const auto& [mono, c] : g.terms()) {
            long long cm = detail::coeff_mod_p(c, p);
            if (cm != 0) mp.terms.emplace_back(mono, cm);
            for (long long e : mono) max_exp = std::max(max_exp, e);
        }
        reduced.push_back(std::move(mp));
    }
    // powers[x][e] = x^e mod p
    std::vector<std::vector<long long>> powers(
        p, std::vector<long long>(max_exp + 1, 1));
    for (long long x = 0; x < p; ++x)
        for (long long e = 1; e <= max_exp; ++e)
            powers[x][e] = powers[x][e - 1] * x % p;

    std::vector<long long> point(nvars, 0);
    while (true) {
        bool all_zero_point = true;
        for (long long v : point)
            if (v != 0) all_zero_point = false;
        if (!(nonzero_only && all_zero_point)) {
            bool common = true;
            for (const ModPoly& g : reduced) {
                long long value = 0;
                for (const auto& [mono, c] : g.terms) {
                    long long t = c;
                    for (int v = 0; v < nvars; ++v)
                        if (mono[v] != 0) t = t * powers[point[v]][mono[v]] % p;
                    value = (value + t) % p;
                }
                if (value != 0) {
                    common = false;
                    break;
                }
            }
            if (common) return true;
        }
        int v = nvars - 1;
        while (v >= 0 && point[v] == p - 1) point[v--] = 0;
        if (v < 0) break;
        ++point[v];
    }
    return false;
}

/// Test oracle: does some nonzero point of F_p^{n+1} annihilate all partial
/// derivatives of f?
inline bool finite_field_zero_search(const WeightedPolynomial& f, long long p) {
    if (f.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
    std::vector<WeightedPolynomial> partials;
    for (int i = 0; i < f.space().var_count(); ++i)
        partials.push_back(f.partial_derivative(i));
    return finite_field_common_zero(partials, p, /*nonzero_only=*/true);
}

}  // namespace wps
