#pragma once

#include <vector>

#include "wps/linalg.hpp"
#include "wps/polynomial.hpp"
#include "wps/simplex.hpp"

namespace wps {

/// A point of H = Q^{n+1} / Q·a in the drop-last-coordinate basis of the
/// section-polytope construction (the only supported chart).
using HPoint = std::vector<Rational>;

/// Finite deduplicated point set in H; insertion order is preserved.
struct HPointSet {
    int dim = 0;
    std::vector<HPoint> points;

    void insert(const HPoint& p) {
        for (const HPoint& q : points)
            if (q == p) return;
        points.push_back(p);
    }
};

/// pi(i)_j = i_j - i_n a_j / a_n for j = 0..n-1. Sends x_j^{d/a_j} to
/// (d/a_j) e_j and x_n^{d/a_n} to -(d/a_n^2) sum a_j e_j.
inline HPoint project_exponent(const WeightedSpace& X, const ExponentVector& m) {
    const int n = X.dim();
    HPoint p(n);
    for (int j = 0; j < n; ++j)
        p[j] = Rational(m[j]) - Rational(m[n] * X.weight(j), X.max_weight());
    return p;
}

/// Projections of all degree-d exponent vectors; always contains the origin
/// in its convex hull.
inline HPointSet section_polytope(const WeightedSpace& X, long long d) {
    std::vector<ExponentVector> monos = enumerate_monomials(X, d);
    if (monos.empty())
        throw Error(ErrorCode::EmptyLinearSystem,
                    "no monomials of weighted degree " + std::to_string(d));
    HPointSet S;
    S.dim = X.dim();
    for (const ExponentVector& m : monos) S.insert(project_exponent(X, m));
    return S;
}

/// Projections of the support of f (the T-bar weight set of V(f)).
inline HPointSet newton_points(const WeightedPolynomial& f) {
    if (f.is_zero())
        throw Error(ErrorCode::ZeroPolynomial,
                    "Newton points of the zero polynomial are undefined");
    HPointSet S;
    S.dim = f.space().dim();
    for (const auto& [m, c] : f.terms())
        S.insert(project_exponent(f.space(), m));
    return S;
}

enum class MembershipStatus { Outside, Boundary, Interior };

struct OriginMembership {
    MembershipStatus status = MembershipStatus::Outside;
    // Convex-combination certificate: mu_i >= 0, sum mu_i = 1,
    // sum mu_i w_i = 0. Strictly positive when status is Interior.
    std::vector<Rational> mu;
};

/// Exact origin membership. Outside iff no convex combination of S is 0.
/// Interior iff the linear span of S is all of Q^n and a strictly positive
/// convex combination exists (finite-set relative-interior characterization,
/// decided by a phase-1 simplex maximizing the minimum mu_i); Boundary
/// otherwise.
inline OriginMembership origin_membership_certified(const HPointSet& S) {
    const std::size_t m = S.points.size();
    const int n = S.dim;
    if (m == 0)
        throw Error(ErrorCode::EmptyLinearSystem, "empty point set");

    // Substitute mu_i = nu_i + delta: maximize delta subject to
    //   sum nu_i w_i + delta * (sum w_i) = 0,  sum nu_i + m delta = 1,
    //   nu >= 0, delta >= 0.
    std::vector<std::vector<Rational>> A(
        static_cast<std::size_t>(n) + 1,
        std::vector<Rational>(m + 1, Rational(0)));
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k < n; ++k) {
        Rational total(0);
        for (std::size_t i = 0; i < m; ++i) {
            A[k][i] = S.points[i][k];
            total += S.points[i][k];
        }
        A[k][m] = total;
    }
    for (std::size_t i = 0; i < m; ++i) A[n][i] = Rational(1);
    A[n][m] = Rational(static_cast<long long>(m));
    b[n] = Rational(1);
    std::vector<Rational> c(m + 1, Rational(0));
    c[m] = Rational(1);

    LpResult lp = solve_lp_max(A, b, c);
    OriginMembership result;
    if (lp.status != LpResult::Status::Optimal) {
        result.status = MembershipStatus::Outside;
        return result;
    }
    const Rational delta = lp.objective;
    result.mu.reserve(m);
    for (std::size_t i = 0; i < m; ++i) result.mu.push_back(lp.x[i] + delta);

    if (delta > 0) {
        RationalMatrix rows;
        for (const HPoint& p : S.points) rows.push_back(p);
        if (matrix_rank(std::move(rows)) == n) {
            result.status = MembershipStatus::Interior;
            return result;
        }
    }
    result.status = MembershipStatus::Boundary;
    return result;
}

inline MembershipStatus origin_membership(const HPointSet& S) {
    return origin_membership_certified(S).status;
}

namespace detail {

inline Rational cross2(const HPoint& o, const HPoint& a, const HPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace detail

/// Strict convex-hull vertices of a 2D point set, counterclockwise starting
/// from the lexicographically smallest point. Collinear non-vertices dropped.
inline std::vector<HPoint> hull2d(const std::vector<HPoint>& input) {
    for (const HPoint& p : input)
        if (p.size() != 2)
            throw Error(ErrorCode::DimensionNot2, "hull2d needs 2D points");
    std::vector<HPoint> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<HPoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && detail::cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && detail::cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace wps
