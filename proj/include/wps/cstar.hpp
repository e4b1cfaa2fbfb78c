#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wps/aut_group.hpp"
#include "wps/polynomial.hpp"

namespace wps {

/// The minimal-weight stratum Z_min = P(k[y_1..y_{n_l}]_d): monomials of
/// degree d supported on the maximal-weight variables only.
struct ZminDescription {
    std::vector<ExponentVector> basis;
    bool is_point = false;
};

inline ZminDescription zmin(const WeightedSpace& X, long long d) {
    if (d % X.max_weight() != 0)
        throw Error(ErrorCode::NoMinWeightSpace,
                    "a_n = " + std::to_string(X.max_weight()) +
                        " does not divide d = " + std::to_string(d));
    ZminDescription Z;
    const int start = X.max_block_start();
    for (ExponentVector& m : enumerate_monomials(X, d)) {
        bool pure_max = true;
        for (int i = 0; i < start && pure_max; ++i)
            if (m[i] != 0) pure_max = false;
        if (pure_max) Z.basis.push_back(std::move(m));
    }
    Z.is_point = X.max_block_size() == 1;
    return Z;
}

/// True iff some term of f is supported only on maximal-weight variables,
/// i.e. [f] lies in the basin of attraction Y^0_min.
inline bool in_Ymin0(const WeightedPolynomial& f) {
    const WeightedSpace& X = f.space();
    const int start = X.max_block_start();
    for (const auto& [m, c] : f.terms()) {
        bool pure_max = true;
        for (int i = 0; i < start && pure_max; ++i)
            if (m[i] != 0) pure_max = false;
        if (pure_max) return true;
    }
    return false;
}

/// Decision for the semistability-equals-stability condition, with a named
/// witness on failure. Degree-independent, so it takes only the space.
struct CStarVerdict {
    bool holds = false;
    std::string witness;  // violating direction when holds is false
    std::optional<long long> violating_weight;
    std::optional<ExponentVector> violating_direction;
};

/// (C*) holds iff (i) no non-maximal distinct weight admits composite
/// monomials of that weighted degree (no unipotent directions fixing Z_min
/// pointwise), and (ii) Z_min is a point or the unipotent radical is
/// trivial. Validated against the Lie-stabilizer oracle over the test
/// family before being trusted.
inline CStarVerdict cstar_holds(const WeightedSpace& X) {
    CStarVerdict verdict;
    for (std::size_t j = 0; j + 1 < X.blocks().size(); ++j) {
        const WeightBlock& block = X.blocks()[j];
        std::vector<ExponentVector> comps = composite_monomials(X, block.weight);
        if (!comps.empty()) {
            verdict.holds = false;
            verdict.violating_weight = block.weight;
            verdict.violating_direction = comps.front();
            verdict.witness = format_monomial(X, comps.front()) +
                              " direction on weight-" +
                              std::to_string(block.weight) + " variable";
            return verdict;
        }
    }
    std::vector<ExponentVector> max_comps =
        composite_monomials(X, X.max_weight());
    if (max_comps.empty() || X.max_block_size() == 1) {
        verdict.holds = true;
        return verdict;
    }
    verdict.holds = false;
    verdict.violating_weight = X.max_weight();
    verdict.violating_direction = max_comps.front();
    verdict.witness = format_monomial(X, max_comps.front()) +
                      " direction on weight-" + std::to_string(X.max_weight()) +
                      " variable with positive-dimensional Z_min";
    return verdict;
}

/// Membership of [f] in the U-sweep of Z_min for the point case: f lies in
/// U.Z_min iff f = c (y + p(x))^{d'} for some c != 0 and weighted form p of
/// degree a_n. Decided by extracting the candidate p from the y^{d'-1}
/// coefficient slice and verifying by expansion.
inline bool in_U_orbit_of_zmin(const WeightedPolynomial& f) {
    const WeightedSpace& X = f.space();
    if (X.max_block_size() != 1)
        throw Error(ErrorCode::UnsupportedPositiveDimensionalZmin,
                    "U.Z_min membership is implemented for point Z_min only "
                    "(n_l = 1)");
    const long long d = f.degree();
    if (d % X.max_weight() != 0)
        throw Error(ErrorCode::NoMinWeightSpace,
                    "a_n does not divide d = " + std::to_string(d));
    if (f.is_zero()) return false;
    const int y = X.var_count() - 1;
    const long long dp = d / X.max_weight();

    ExponentVector top(X.var_count(), 0);
    top[y] = dp;
    const Rational c = f.coefficient(top);
    if (c == 0) return false;

    WeightedPolynomial p = f.slice(y, dp - 1) * (Rational(1) / (Rational(dp) * c));
    ExponentVector yvec(X.var_count(), 0);
    yvec[y] = 1;
    WeightedPolynomial candidate =
        (WeightedPolynomial::monomial(X, yvec) + p).pow(dp) * c;
    return candidate == f;
}

/// Uhat-stability for the point case under (C*):
/// f in Y^0_min and not in the swept locus U.Z_min.
inline bool uhat_stable(const WeightedPolynomial& f) {
    const WeightedSpace& X = f.space();
    if (!cstar_holds(X).holds)
        throw Error(ErrorCode::CStarFails,
                    "the (C*) condition fails for this space");
    if (X.max_block_size() != 1)
        throw Error(ErrorCode::UnsupportedPositiveDimensionalZmin,
                    "Z_min is positive-dimensional");
    return in_Ymin0(f) && !in_U_orbit_of_zmin(f);
}

}  // namespace wps
