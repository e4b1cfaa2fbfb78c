#pragma once

#include <map>
#include <vector>

#include "wps/linalg.hpp"
#include "wps/polynomial.hpp"

namespace wps {

/// Structure report for G = Aut_gr(S): Levi blocks GL_{n_j} per distinct
/// weight and, per variable, the composite monomials spanning the unipotent
/// directions available to that variable.
struct AutReport {
    std::vector<WeightBlock> levi_blocks;
    long long dim_aut = 0;
    long long dim_unipotent = 0;
    // unipotent_directions[i]: composite (total degree >= 2) exponent vectors
    // of weighted degree a_i, in canonical order.
    std::vector<std::vector<ExponentVector>> unipotent_directions;
};

inline std::vector<ExponentVector> composite_monomials(const WeightedSpace& X,
                                                       long long d) {
    std::vector<ExponentVector> out;
    for (ExponentVector& m : enumerate_monomials(X, d))
        if (total_degree(m) >= 2) out.push_back(std::move(m));
    return out;
}

inline AutReport aut_report(const WeightedSpace& X) {
    AutReport report;
    report.levi_blocks = X.blocks();
    for (const WeightBlock& block : X.blocks())
        report.dim_aut += block.count * graded_dimension(X, block.weight);
    for (int i = 0; i < X.var_count(); ++i) {
        report.unipotent_directions.push_back(composite_monomials(X, X.weight(i)));
        report.dim_unipotent +=
            static_cast<long long>(report.unipotent_directions.back().size());
    }
    return report;
}

/// A grading 1-parameter subgroup: either lambda_a (the Euler grading, weight
/// b_j on each block) or lambda_{g,N}, which on functions gives weight +N to
/// non-maximal variables and -1 to maximal ones.
struct GradingOneParameter {
    enum class Kind { LambdaA, LambdaGN };
    Kind kind = Kind::LambdaA;
    long long N = 1;

    static GradingOneParameter lambda_a() { return {Kind::LambdaA, 1}; }
    static GradingOneParameter lambda_gN(long long N) {
        if (N < 1)
            throw Error(ErrorCode::IndexOutOfRange, "lambda_{g,N} needs N >= 1");
        return {Kind::LambdaGN, N};
    }
};

/// Weight of the monomial m under the 1-PS acting on functions.
inline long long lambda_weight(const WeightedSpace& X,
                               const GradingOneParameter& g,
                               const ExponentVector& m) {
    if (g.kind == GradingOneParameter::Kind::LambdaA)
        return weighted_degree(X, m);
    long long nonmax = 0, maxpart = 0;
    for (int i = 0; i < X.var_count(); ++i)
        (X.is_maximal(i) ? maxpart : nonmax) += m[i];
    return g.N * nonmax - maxpart;
}

/// omega_min = -d/a_n, the minimal lambda_{g,N}-weight on S_d (independent
/// of N). Defined only when pure powers of the maximal variables exist.
inline Rational omega_min(const WeightedSpace& X, long long d) {
    if (d % X.max_weight() != 0)
        throw Error(ErrorCode::NoMinWeightSpace,
                    "a_n = " + std::to_string(X.max_weight()) +
                        " does not divide d = " + std::to_string(d));
    return Rational(-d, X.max_weight());
}

/// Well-adapted twisting character chi = -omega_min - epsilon/2, so that the
/// twisted minimal weight is exactly -epsilon/2.
inline Rational adapted_twist(const WeightedSpace& X, long long d,
                              const Rational& epsilon) {
    return -omega_min(X, d) - epsilon / 2;
}

namespace detail {

/// Nullity of the semi-invariance system  sum_i xi(x_i) f_i = scalar * f
/// in the unknowns (coefficients of xi, scalar). With include_levi the
/// xi range over the full Lie algebra (gl blocks + unipotent directions);
/// without, over the unipotent part only.
inline long long semi_invariance_nullity(const WeightedPolynomial& f,
                                         bool include_levi) {
    if (f.is_zero())
        throw Error(ErrorCode::ZeroPolynomial,
                    "stabilizer of the zero polynomial is undefined");
    const WeightedSpace& X = f.space();
    std::vector<WeightedPolynomial> partials;
    for (int i = 0; i < X.var_count(); ++i)
        partials.push_back(f.partial_derivative(i));

    std::vector<WeightedPolynomial> columns;
    if (include_levi) {
        int start = 0;
        for (const WeightBlock& block : X.blocks()) {
            for (int i = start; i < start + block.count; ++i)
                for (int j = start; j < start + block.count; ++j) {
                    ExponentVector var(X.var_count(), 0);
                    var[j] = 1;
                    columns.push_back(WeightedPolynomial::monomial(X, var) *
                                      partials[i]);
                }
            start += block.count;
        }
    }
    for (int i = 0; i < X.var_count(); ++i)
        for (const ExponentVector& m : composite_monomials(X, X.weight(i)))
            columns.push_back(WeightedPolynomial::monomial(X, m) * partials[i]);
    columns.push_back(-f);  // the scalar unknown

    std::map<ExponentVector, std::size_t> row_of;
    for (const WeightedPolynomial& col : columns)
        for (const auto& [m, c] : col.terms())
            row_of.emplace(m, row_of.size());

    RationalMatrix matrix(row_of.size(),
                          std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].terms())
            matrix[row_of.at(m)][j] = c;

    return static_cast<long long>(columns.size()) - matrix_rank(matrix);
}

}  // namespace detail

/// Dimension of the Lie-algebra stabilizer of [f] in Aut_gr(S): the solution
/// space of xi(f) = alpha f. Always >= 1 (the Euler direction).
inline long long lie_stabilizer_dimension(const WeightedPolynomial& f) {
    return detail::semi_invariance_nullity(f, true);
}

/// Same system restricted to the unipotent part: dimension of
/// { (xi, lambda) : xi unipotent, xi(f) = lambda f }. Zero iff the unipotent
/// Lie stabilizer of [f] is trivial.
inline long long unipotent_stabilizer_nullity(const WeightedPolynomial& f) {
    return detail::semi_invariance_nullity(f, false);
}

}  // namespace wps
