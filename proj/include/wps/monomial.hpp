#pragma once

#include <string>
#include <vector>

#include "wps/weighted_space.hpp"

namespace wps {

/// Exponent vector (i_0,...,i_n) of a monomial; all entries >= 0.
using ExponentVector = std::vector<long long>;

inline long long total_degree(const ExponentVector& m) {
    long long s = 0;
    for (long long e : m) s += e;
    return s;
}

inline long long weighted_degree(const WeightedSpace& X, const ExponentVector& m) {
    long long s = 0;
    for (int i = 0; i < X.var_count(); ++i) s += X.weight(i) * m[i];
    return s;
}

/// Total degree of m restricted to the maximal-weight block.
inline long long max_block_degree(const WeightedSpace& X, const ExponentVector& m) {
    long long s = 0;
    for (int i = X.max_block_start(); i < X.var_count(); ++i) s += m[i];
    return s;
}

/// The canonical monomial order fixing A-matrix column order: ascending
/// degree in the highest-weight block, ties broken by descending
/// lexicographic comparison of the full exponent vector.
inline bool canonical_monomial_less(const WeightedSpace& X,
                                    const ExponentVector& a,
                                    const ExponentVector& b) {
    long long da = max_block_degree(X, a);
    long long db = max_block_degree(X, b);
    if (da != db) return da < db;
    return a > b;  // descending lexicographic
}

/// All solutions of sum a_j i_j = d with i_j >= 0, in canonical order.
/// Empty when no monomial of weighted degree d exists.
inline std::vector<ExponentVector> enumerate_monomials(const WeightedSpace& X,
                                                       long long d) {
    std::vector<ExponentVector> out;
    if (d < 0) return out;
    ExponentVector current(X.var_count(), 0);
    const int m = X.var_count();
    auto rec = [&](auto&& self, int var, long long remaining) -> void {
        if (var == m - 1) {
            if (remaining % X.weight(var) == 0) {
                current[var] = remaining / X.weight(var);
                out.push_back(current);
                current[var] = 0;
            }
            return;
        }
        for (long long e = 0; e * X.weight(var) <= remaining; ++e) {
            current[var] = e;
            self(self, var + 1, remaining - e * X.weight(var));
        }
        current[var] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return canonical_monomial_less(X, a, b);
    });
    return out;
}

/// dim_k S_d, the number of monomials of weighted degree d.
inline long long graded_dimension(const WeightedSpace& X, long long d) {
    return static_cast<long long>(enumerate_monomials(X, d).size());
}

/// Render a monomial with the space's variable names, e.g. "x^2*z".
/// The empty monomial renders as "1".
inline std::string format_monomial(const WeightedSpace& X, const ExponentVector& m) {
    std::string out;
    for (int i = 0; i < X.var_count(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += X.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace wps
