#pragma once

#include <json.hpp>

#include "wps/aut_group.hpp"
#include "wps/cstar.hpp"
#include "wps/polytope.hpp"
#include "wps/quasismooth.hpp"
#include "wps/stability.hpp"

namespace wps {

using Json = nlohmann::ordered_json;

/// Exact rationals serialize as [num, den] pairs; entries that do not fit in
/// 64 bits fall back to decimal strings.
inline Json to_json(const Rational& q) {
    Json pair = Json::array();
    if (auto n = to_int64(numerator(q)))
        pair.push_back(*n);
    else
        pair.push_back(to_string(numerator(q)));
    if (auto d = to_int64(denominator(q)))
        pair.push_back(*d);
    else
        pair.push_back(to_string(denominator(q)));
    return pair;
}

inline Json to_json(const HPoint& p) {
    Json arr = Json::array();
    for (const Rational& c : p) arr.push_back(to_json(c));
    return arr;
}

inline Json to_json(const HPointSet& S) {
    Json arr = Json::array();
    for (const HPoint& p : S.points) arr.push_back(to_json(p));
    return arr;
}

inline Json to_json(const WeightedSpace& X) {
    Json j;
    j["weights"] = X.weights();
    Json blocks = Json::array();
    for (const WeightBlock& b : X.blocks())
        blocks.push_back(Json::array({b.weight, b.count}));
    j["distinct_weights"] = blocks;
    j["variables"] = X.names();
    j["dimension"] = X.dim();
    j["lcm"] = X.lcm_weights();
    j["well_formed"] = true;  // enforced at construction
    return j;
}

inline Json to_json(const WeightedSpace& X, const ExponentVector& m) {
    Json j;
    j["exponents"] = m;
    j["monomial"] = format_monomial(X, m);
    return j;
}

inline Json to_json(const WeightedSpace& X, const AutReport& r) {
    Json j;
    Json blocks = Json::array();
    for (const WeightBlock& b : r.levi_blocks)
        blocks.push_back(Json::array({b.weight, b.count}));
    j["levi_blocks"] = blocks;
    j["dim_aut"] = r.dim_aut;
    j["dim_unipotent"] = r.dim_unipotent;
    Json dirs;
    for (int i = 0; i < X.var_count(); ++i) {
        Json list = Json::array();
        for (const ExponentVector& m : r.unipotent_directions[i])
            list.push_back(format_monomial(X, m));
        dirs[X.name(i)] = list;
    }
    j["unipotent_directions"] = dirs;
    Json lambda_a = Json::array();
    for (const WeightBlock& b : r.levi_blocks) lambda_a.push_back(b.weight);
    j["lambda_a_block_weights"] = lambda_a;
    return j;
}

inline Json to_json(const CStarVerdict& v) {
    Json j;
    j["holds"] = v.holds;
    if (!v.holds) j["witness"] = v.witness;
    return j;
}

inline Json to_json(const WeightedSpace& X, const ZminDescription& z) {
    Json j;
    Json basis = Json::array();
    for (const ExponentVector& m : z.basis)
        basis.push_back(format_monomial(X, m));
    j["basis"] = basis;
    j["is_point"] = z.is_point;
    return j;
}

inline Json to_json(const WeightedSpace& X, const FletcherVerdict& v) {
    Json j;
    j["general_quasismooth"] = v.general_quasismooth;
    if (v.degree_variable)
        j["degree_variable"] = X.name(*v.degree_variable);
    Json ev = Json::array();
    for (const SubsetEvidence& e : v.evidence) {
        Json one;
        Json subset = Json::array();
        for (int i : e.subset) subset.push_back(X.name(i));
        one["subset"] = subset;
        if (e.monomial) one["monomial"] = format_monomial(X, *e.monomial);
        if (!e.matched.empty()) {
            Json matched = Json::array();
            for (const auto& [idx, mono] : e.matched) {
                Json entry;
                entry["e"] = X.name(idx);
                entry["monomial"] = format_monomial(X, mono);
                matched.push_back(entry);
            }
            one["matched"] = matched;
        }
        ev.push_back(one);
    }
    j["evidence"] = ev;
    if (!v.failing_subset.empty()) {
        Json fs = Json::array();
        for (int i : v.failing_subset) fs.push_back(X.name(i));
        j["failing_subset"] = fs;
    }
    return j;
}

inline Json to_json(const AMatrix& A) {
    Json j;
    Json rows = Json::array();
    for (int r = 0; r < A.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < A.cols(); ++c) row.push_back(A.at(r, c));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    return j;
}

inline Json to_json(const StabilityReport& r) {
    Json j;
    j["space"] = r.space;
    j["degree"] = r.degree;
    j["N"] = r.N;
    j["torus_status"] = torus_status_name(r.torus_status);
    Json cert;
    cert["kind"] = r.kind == CertificateKind::Quasismooth ? "QuasismoothCertificate"
                                                          : "TorusOnly";
    Json details;
    details["degree_at_least_max_plus_2"] = r.degree_large_enough;
    details["cstar_holds"] = r.cstar;
    details["quasismooth"] = r.quasismooth;
    details["g_stable"] = r.g_stable;
    if (!r.caveat.empty()) details["caveat"] = r.caveat;
    cert["details"] = details;
    j["certificate"] = cert;
    j["newton_points"] = to_json(r.newton);
    if (!r.mu.empty()) {
        Json mu = Json::array();
        for (const Rational& q : r.mu) mu.push_back(to_json(q));
        j["mu_certificate"] = mu;
    }
    return j;
}

}  // namespace wps
