#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "wps/polynomial.hpp"

namespace wps::gb {

/// Degree-reverse-lexicographic order over total (unweighted) degree, with
/// an optional variable permutation. 1 is minimal; the order is compatible
/// with multiplication.
struct MonomialOrder {
    std::vector<int> perm;  // perm[k] = variable read at position k; identity if empty

    int cmp(const ExponentVector& u, const ExponentVector& v) const {
        long long du = total_degree(u), dv = total_degree(v);
        if (du != dv) return du < dv ? -1 : 1;
        for (int k = static_cast<int>(u.size()) - 1; k >= 0; --k) {
            int i = perm.empty() ? k : perm[k];
            long long diff = u[i] - v[i];
            if (diff != 0) return diff < 0 ? 1 : -1;  // last nonzero negative wins
        }
        return 0;
    }
    bool less(const ExponentVector& u, const ExponentVector& v) const {
        return cmp(u, v) < 0;
    }
};

struct Term {
    ExponentVector mono;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in the engine's working form: terms sorted descending under the
/// order in use, leading term first. Grading is ignored here.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
    bool is_constant() const {
        return terms.size() == 1 && total_degree(terms.front().mono) == 0;
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

struct Limits {
    std::uint64_t max_steps = 1'000'000;
};

struct PolyIdeal {
    std::vector<Poly> generators;  // free of zero polynomials
    int nvars = 0;
};

struct GroebnerBasis {
    std::vector<Poly> basis;  // reduced; ascending by leading monomial
    MonomialOrder order;
    bool reduced = true;

    bool is_unit() const {
        return basis.size() == 1 && basis.front().is_constant();
    }
};

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline ExponentVector mono_lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline ExponentVector mono_sub(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ExponentVector mono_add(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Poly from_term_map(const std::map<ExponentVector, Rational>& m,
                          const MonomialOrder& ord) {
    Poly p;
    for (const auto& [mono, c] : m)
        if (c != 0) p.terms.push_back({mono, c});
    std::sort(p.terms.begin(), p.terms.end(), [&](const Term& a, const Term& b) {
        return ord.cmp(a.mono, b.mono) > 0;
    });
    return p;
}

inline Poly from_weighted(const WeightedPolynomial& f, const MonomialOrder& ord) {
    return from_term_map(f.terms(), ord);
}

/// Clear denominators and divide out integer content; leading coefficient
/// made positive. Keeps Buchberger coefficients from snowballing.
inline void make_primitive(Poly& p) {
    if (p.is_zero()) return;
    Integer den_lcm = 1;
    for (const Term& t : p.terms)
        den_lcm = lcm(den_lcm, denominator(t.coeff));
    Integer content = 0;
    for (const Term& t : p.terms) {
        Integer n = numerator(t.coeff) * (den_lcm / denominator(t.coeff));
        content = gcd(content, n);
    }
    if (content == 0) content = 1;
    Rational scale(den_lcm, content);
    if (p.lt().coeff < 0) scale = -scale;
    for (Term& t : p.terms) t.coeff *= scale;
}

inline void make_monic(Poly& p) {
    if (p.is_zero()) return;
    Rational lc = p.lt().coeff;
    for (Term& t : p.terms) t.coeff /= lc;
}

namespace detail {

class Engine {
public:
    Engine(MonomialOrder ord, Limits limits)
        : ord_(std::move(ord)), limits_(limits) {}

    struct DescCmp {
        const MonomialOrder* ord;
        bool operator()(const ExponentVector& a, const ExponentVector& b) const {
            return ord->cmp(a, b) > 0;  // descending: leading term first
        }
    };
    // Reductions run over the integers (pseudo-reduction) with content
    // stripped as it appears; rational arithmetic here would let
    // intermediate coefficients swell to hundreds of kilobits.
    using WorkPoly = std::map<ExponentVector, Integer, DescCmp>;
    using IntTerm = std::pair<ExponentVector, Integer>;

    static std::vector<IntTerm> to_integer_terms(const Poly& p) {
        Integer den = 1;
        for (const Term& t : p.terms) den = lcm(den, denominator(t.coeff));
        std::vector<IntTerm> out;
        out.reserve(p.terms.size());
        Integer content = 0;
        for (const Term& t : p.terms) {
            Integer c = numerator(t.coeff) * (den / denominator(t.coeff));
            content = gcd(content, c);
            out.emplace_back(t.mono, std::move(c));
        }
        if (content == 0) content = 1;
        if (!out.empty() && out.front().second < 0) content = -content;
        for (IntTerm& t : out) t.second /= content;
        return out;
    }

    static Poly from_integer_terms(std::vector<IntTerm> terms) {
        Integer content = 0;
        for (const IntTerm& t : terms) content = gcd(content, t.second);
        if (content == 0) content = 1;
        if (!terms.empty() && terms.front().second < 0) content = -content;
        Poly p;
        p.terms.reserve(terms.size());
        for (IntTerm& t : terms)
            p.terms.push_back({std::move(t.first), Rational(t.second / content)});
        return p;
    }

    using RatPoly = std::map<ExponentVector, Rational, DescCmp>;

    RatPoly to_rat(const Poly& p) const {
        RatPoly w{DescCmp{&ord_}};
        for (const Term& t : p.terms) w.emplace(t.mono, t.coeff);
        return w;
    }

    Poly from_rat(const RatPoly& w) const {
        Poly p;
        for (const auto& [m, c] : w)
            if (c != 0) p.terms.push_back({m, c});
        return p;
    }

    std::vector<int> reducer_scan(const std::vector<Poly>& basis,
                                  const std::vector<int>* use) const {
        std::vector<int> scan;
        if (use) {
            scan = *use;
        } else {
            scan.resize(basis.size());
            for (std::size_t k = 0; k < basis.size(); ++k)
                scan[k] = static_cast<int>(k);
        }
        std::sort(scan.begin(), scan.end(), [&](int a, int b) {
            if (basis[a].is_zero() || basis[b].is_zero())
                return basis[b].is_zero() && !basis[a].is_zero();
            int c = ord_.cmp(basis[a].lt().mono, basis[b].lt().mono);
            return c != 0 ? c < 0 : a < b;
        });
        return scan;
    }

    void cancel_lead(RatPoly& p, RatPoly::iterator lead, const Poly& g) {
        tick();
        const Rational scale = lead->second / g.lt().coeff;
        const ExponentVector shift = mono_sub(lead->first, g.lt().mono);
        p.erase(lead);
        for (std::size_t t = 1; t < g.terms.size(); ++t) {
            ExponentVector m = mono_add(g.terms[t].mono, shift);
            auto [it, inserted] = p.emplace(std::move(m), -scale * g.terms[t].coeff);
            if (!inserted) {
                it->second -= scale * g.terms[t].coeff;
                if (it->second == 0) p.erase(it);
            }
        }
    }

    /// Full normal form of f against basis. Candidate divisors are scanned
    /// in ascending leading-monomial order. Deterministic.
    Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                     const std::vector<int>* use = nullptr) {
        const std::vector<int> scan = reducer_scan(basis, use);
        RatPoly p = to_rat(f);
        Poly result;
        while (!p.empty()) {
            auto lead = p.begin();
            const Poly* g = nullptr;
            for (int k : scan) {
                const Poly& cand = basis[static_cast<std::size_t>(k)];
                if (cand.is_zero()) continue;
                if (divides(cand.lt().mono, lead->first)) {
                    g = &cand;
                    break;
                }
            }
            if (!g) {
                result.terms.push_back({lead->first, lead->second});
                p.erase(lead);
                continue;
            }
            cancel_lead(p, lead, *g);
        }
        return result;
    }

    /// Top-reduction only: cancel the leading term until it is irreducible
    /// or the polynomial vanishes, leaving the tail alone. Used inside the
    /// Buchberger loop, where canonicalizing tails is wasted work.
    Poly reduce_top(const Poly& f, const std::vector<Poly>& basis) {
        const std::vector<int> scan = reducer_scan(basis, nullptr);
        RatPoly p = to_rat(f);
        while (!p.empty()) {
            auto lead = p.begin();
            const Poly* g = nullptr;
            for (int k : scan) {
                const Poly& cand = basis[static_cast<std::size_t>(k)];
                if (cand.is_zero()) continue;
                if (divides(cand.lt().mono, lead->first)) {
                    g = &cand;
                    break;
                }
            }
            if (!g) break;
            cancel_lead(p, lead, *g);
        }
        return from_rat(p);
    }

    /// S-polynomial, primitive integer form.
    Poly spoly(const Poly& f, const Poly& g) {
        std::vector<IntTerm> fi = to_integer_terms(f);
        std::vector<IntTerm> gi = to_integer_terms(g);
        const ExponentVector l = mono_lcm(fi.front().first, gi.front().first);
        const Integer gamma = gcd(fi.front().second, gi.front().second);
        const Integer cf = gi.front().second / gamma;
        const Integer cg = fi.front().second / gamma;
        const ExponentVector sf = mono_sub(l, fi.front().first);
        const ExponentVector sg = mono_sub(l, gi.front().first);
        WorkPoly p(DescCmp{&ord_});
        for (const IntTerm& t : fi) {
            auto [it, inserted] = p.emplace(mono_add(t.first, sf), cf * t.second);
            if (!inserted) it->second += cf * t.second;
        }
        for (const IntTerm& t : gi) {
            auto [it, inserted] = p.emplace(mono_add(t.first, sg), -cg * t.second);
            if (!inserted) it->second -= cg * t.second;
        }
        std::vector<IntTerm> out;
        for (auto& [m, c] : p)
            if (c != 0) out.emplace_back(m, c);
        return from_integer_terms(std::move(out));
    }

    GroebnerBasis run(const PolyIdeal& ideal) {
        std::vector<Poly> G;
        for (const Poly& g : ideal.generators) {
            if (g.is_zero()) continue;
            Poly p = g;
            make_primitive(p);
            if (p.is_constant()) return unit_basis(ideal.nvars);
            G.push_back(std::move(p));
        }
        if (G.empty()) return GroebnerBasis{{}, ord_, true};

        std::set<std::pair<int, int>> pending;
        for (int i = 0; i < static_cast<int>(G.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(G.size()); ++j)
                pending.insert({i, j});

        while (!pending.empty()) {
            auto best = pending.end();
            for (auto it = pending.begin(); it != pending.end(); ++it) {
                if (best == pending.end() || pair_less(G, *it, *best)) best = it;
            }
            auto [i, j] = *best;
            pending.erase(best);

            const ExponentVector l = mono_lcm(G[i].lt().mono, G[j].lt().mono);
            // Buchberger's first criterion: coprime leading monomials.
            if (l == mono_add(G[i].lt().mono, G[j].lt().mono)) continue;
            // Chain criterion.
            if (chain_criterion(G, pending, i, j, l)) continue;

            Poly r = reduce_top(spoly(G[i], G[j]), G);
            if (r.is_zero()) continue;
            make_primitive(r);
            if (r.is_constant()) return unit_basis(ideal.nvars);
            int idx = static_cast<int>(G.size());
            G.push_back(std::move(r));
            for (int k = 0; k < idx; ++k) pending.insert({k, idx});
        }

        return reduce_basis(std::move(G));
    }

    GroebnerBasis reduce_basis(std::vector<Poly> G) {
        std::vector<int> order_idx(G.size());
        for (std::size_t i = 0; i < G.size(); ++i) order_idx[i] = static_cast<int>(i);
        std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
            int c = ord_.cmp(G[a].lt().mono, G[b].lt().mono);
            return c != 0 ? c < 0 : a < b;
        });
        std::vector<int> kept;
        for (int idx : order_idx) {
            bool redundant = false;
            for (int k : kept)
                if (divides(G[k].lt().mono, G[idx].lt().mono)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(idx);
        }
        std::vector<Poly> minimal;
        for (int k : kept) minimal.push_back(G[k]);
        std::vector<Poly> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<int> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(static_cast<int>(j));
            Poly r = normal_form(minimal[i], minimal, &others);
            make_monic(r);
            reduced.push_back(std::move(r));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
            return ord_.cmp(a.lt().mono, b.lt().mono) < 0;
        });
        return GroebnerBasis{std::move(reduced), ord_, true};
    }

    GroebnerBasis unit_basis(int nvars) {
        Poly one;
        one.terms.push_back({ExponentVector(nvars, 0), Rational(1)});
        return GroebnerBasis{{one}, ord_, true};
    }

private:
    bool pair_less(const std::vector<Poly>& G, std::pair<int, int> a,
                   std::pair<int, int> b) const {
        ExponentVector la = mono_lcm(G[a.first].lt().mono, G[a.second].lt().mono);
        ExponentVector lb = mono_lcm(G[b.first].lt().mono, G[b.second].lt().mono);
        long long da = total_degree(la), db = total_degree(lb);
        if (da != db) return da < db;  // normal strategy
        int c = ord_.cmp(la, lb);
        if (c != 0) return c < 0;
        return a < b;
    }

    bool chain_criterion(const std::vector<Poly>& G,
                         const std::set<std::pair<int, int>>& pending, int i,
                         int j, const ExponentVector& l) const {
        for (int k = 0; k < static_cast<int>(G.size()); ++k) {
            if (k == i || k == j) continue;
            if (!divides(G[k].lt().mono, l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) &&
                !pending.count({p2.first, p2.second}))
                return true;
        }
        return false;
    }

    void tick() {
        if (++steps_ > limits_.max_steps)
            throw Error(ErrorCode::ResourceLimit,
                        "Groebner reduction step limit (" +
                            std::to_string(limits_.max_steps) + ") exceeded");
    }

    MonomialOrder ord_;
    Limits limits_;
    std::uint64_t steps_ = 0;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal under ord. Deterministic: identical
/// inputs give identical bases. Normal pair-selection strategy with the
/// coprimality and chain criteria; exact rationals with content removal.
inline GroebnerBasis buchberger(const PolyIdeal& ideal,
                                const MonomialOrder& ord = {},
                                const Limits& limits = {}) {
    return detail::Engine(ord, limits).run(ideal);
}

/// Normal form helper exposed for tests (S-polynomial re-checks).
inline Poly normal_form(const Poly& f, const GroebnerBasis& basis,
                        const Limits& limits = {}) {
    detail::Engine engine(basis.order, limits);
    return engine.normal_form(f, basis.basis);
}

inline Poly spolynomial(const Poly& f, const Poly& g, const MonomialOrder& ord,
                        const Limits& limits = {}) {
    return detail::Engine(ord, limits).spoly(f, g);
}

/// Decide V(gens) = {0} for weighted-homogeneous generators (so V is a cone):
/// compute a Groebner basis and require a pure power of every variable among
/// the leading terms (zero-dimensionality of a cone forces support {0}).
inline bool cone_is_origin_only(const std::vector<WeightedPolynomial>& gens,
                                const Limits& limits = {}) {
    if (gens.empty()) return false;
    const WeightedSpace& X = gens.front().space();
    PolyIdeal ideal;
    ideal.nvars = X.var_count();
    MonomialOrder ord;
    for (const WeightedPolynomial& g : gens) {
        if (!(g.space() == X))
            throw Error(ErrorCode::NonHomogeneousInput,
                        "generators live in different spaces");
        for (const auto& [m, c] : g.terms())
            if (weighted_degree(X, m) != g.degree())
                throw Error(ErrorCode::NonHomogeneousInput,
                            "generator is not weighted-homogeneous");
        if (!g.is_zero()) ideal.generators.push_back(from_weighted(g, ord));
    }
    if (ideal.generators.empty()) return false;  // V is the whole cone
    GroebnerBasis basis = buchberger(ideal, ord, limits);
    if (basis.is_unit()) return true;
    for (int i = 0; i < ideal.nvars; ++i) {
        bool pure_power = false;
        for (const Poly& g : basis.basis) {
            const ExponentVector& m = g.lt().mono;
            bool pure = m[i] >= 1;
            for (int k = 0; k < ideal.nvars && pure; ++k)
                if (k != i && m[k] != 0) pure = false;
            if (pure) {
                pure_power = true;
                break;
            }
        }
        if (!pure_power) return false;
    }
    return true;
}

/// Decide V(gens) ∩ (k*)^nvars ≠ ∅ by the Rabinowitsch trick: adjoin t with
/// t·x_0···x_{n} − 1 and test whether the ideal becomes the unit ideal.
inline bool has_torus_zero(const std::vector<Poly>& gens, int nvars,
                           const Limits& limits = {}) {
    if (nvars < 1)
        throw Error(ErrorCode::IndexOutOfRange, "need at least one variable");
    PolyIdeal ideal;
    ideal.nvars = nvars + 1;
    // grevlex with the auxiliary variable most significant: reductions then
    // eliminate t early, which keeps the unit-ideal detection cheap.
    MonomialOrder ord;
    ord.perm.push_back(nvars);
    for (int i = 0; i < nvars; ++i) ord.perm.push_back(i);
    std::map<ExponentVector, Rational> sat;
    sat[ExponentVector(nvars + 1, 1)] = Rational(1);
    sat[ExponentVector(nvars + 1, 0)] = Rational(-1);
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        std::map<ExponentVector, Rational> lifted;
        for (const Term& t : g.terms) {
            ExponentVector m = t.mono;
            m.push_back(0);
            lifted.emplace(std::move(m), t.coeff);
        }
        ideal.generators.push_back(from_term_map(lifted, ord));
    }
    ideal.generators.push_back(from_term_map(sat, ord));
    GroebnerBasis basis = buchberger(ideal, ord, limits);
    return !basis.is_unit();
}

inline bool has_torus_zero(const std::vector<WeightedPolynomial>& gens, int nvars,
                           const Limits& limits = {}) {
    MonomialOrder ord;
    std::vector<Poly> raw;
    for (const WeightedPolynomial& g : gens)
        if (!g.is_zero()) raw.push_back(from_weighted(g, ord));
    return has_torus_zero(raw, nvars, limits);
}

}  // namespace wps::gb
