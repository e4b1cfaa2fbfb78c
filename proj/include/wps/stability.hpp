#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wps/cstar.hpp"
#include "wps/polytope.hpp"
#include "wps/quasismooth.hpp"

namespace wps {

enum class TorusStatus { Unstable, StrictlySemistable, Stable };

inline const char* torus_status_name(TorusStatus s) {
    switch (s) {
        case TorusStatus::Unstable: return "Unstable";
        case TorusStatus::StrictlySemistable: return "StrictlySemistable";
        case TorusStatus::Stable: return "Stable";
    }
    return "Unknown";
}

inline TorusStatus to_torus_status(MembershipStatus m) {
    switch (m) {
        case MembershipStatus::Outside: return TorusStatus::Unstable;
        case MembershipStatus::Boundary: return TorusStatus::StrictlySemistable;
        case MembershipStatus::Interior: return TorusStatus::Stable;
    }
    return TorusStatus::Unstable;
}

/// Hilbert-Mumford status of [f] for the maximal torus modulo the global
/// stabilizer: position of the origin in the Newton polytope. Boundary maps
/// to StrictlySemistable at torus level only; no G-semistability claim.
inline TorusStatus torus_status(const WeightedPolynomial& f) {
    return to_torus_status(origin_membership(newton_points(f)));
}

/// Exponents of the degree-d monomial basis as columns, in canonical order.
struct AMatrix {
    int rows = 0;
    std::vector<ExponentVector> columns;

    long long at(int r, int c) const { return columns.at(c).at(r); }
    int cols() const { return static_cast<int>(columns.size()); }
};

inline AMatrix a_matrix(const WeightedSpace& X, long long d) {
    AMatrix A;
    A.rows = X.var_count();
    A.columns = enumerate_monomials(X, d);
    if (A.columns.empty())
        throw Error(ErrorCode::EmptyLinearSystem,
                    "no monomials of weighted degree " + std::to_string(d));
    return A;
}

/// Membership of [f] in the open discriminant stratum: V(f) has a singular
/// point on the torus. This tests the open stratum nabla^o_A, not its
/// closure.
inline bool in_nabla_open(const WeightedPolynomial& f,
                          const gb::Limits& limits = {}) {
    if (f.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
    std::vector<WeightedPolynomial> gens;
    gens.push_back(f);
    for (int i = 0; i < f.space().var_count(); ++i)
        gens.push_back(f.partial_derivative(i));
    return gb::has_torus_zero(gens, f.space().var_count(), limits);
}

enum class CertificateKind { Quasismooth, TorusOnly };

struct StabilityReport {
    std::vector<long long> space;
    long long degree = 0;
    long long N = 0;
    TorusStatus torus_status = TorusStatus::Unstable;
    CertificateKind kind = CertificateKind::TorusOnly;
    bool degree_large_enough = false;  // d >= max{a_i} + 2
    bool cstar = false;
    bool quasismooth = false;
    bool g_stable = false;
    std::string caveat;
    HPointSet newton;
    std::vector<Rational> mu;  // convex-combination certificate, if any
};

/// The certificate path of the main stability theorem: when d >= max{a_i}+2,
/// (C*) holds and f is quasismooth, [f] is G-stable. Otherwise only the
/// torus-level verdict is reported; G-stability would need every G-translate
/// and is not decidable here.
inline StabilityReport g_stability_certificate(
    const WeightedPolynomial& f, std::optional<long long> N = std::nullopt,
    const gb::Limits& limits = {}) {
    if (f.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
    const WeightedSpace& X = f.space();
    const long long d = f.degree();
    if (!X.is_cartier_degree(d))
        throw Error(ErrorCode::NotCartierDegree,
                    "d = " + std::to_string(d) + " is not a Cartier degree (lcm " +
                        std::to_string(X.lcm_weights()) + ")");

    StabilityReport report;
    report.space = X.weights();
    report.degree = d;
    report.N = N.value_or(d + 1);
    report.newton = newton_points(f);
    OriginMembership om = origin_membership_certified(report.newton);
    report.torus_status = to_torus_status(om.status);
    report.mu = om.mu;

    report.degree_large_enough = d >= X.max_weight() + 2;
    report.cstar = cstar_holds(X).holds;
    report.quasismooth = is_quasismooth(f, limits);
    if (report.degree_large_enough && report.cstar && report.quasismooth) {
        report.kind = CertificateKind::Quasismooth;
        report.g_stable = true;
    } else {
        report.kind = CertificateKind::TorusOnly;
        report.g_stable = false;
        report.caveat =
            "torus-level verdict only: full G-stability requires all "
            "G-translates and is not decidable here";
    }
    return report;
}

}  // namespace wps
