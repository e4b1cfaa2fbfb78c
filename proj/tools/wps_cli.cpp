// wps: exact computations for hypersurfaces in weighted projective spaces.
//
// Subcommands: space, monomials, aut, cstar, zmin, polytope, newton, qs,
// fletcher, stability, amatrix, nabla. JSON on stdout by default; CSV and
// SVG where it makes sense. Domain errors produce machine-readable JSON on
// stderr and exit code 1; usage errors exit 2.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wps/json_io.hpp"
#include "wps/svg.hpp"
#include "wps/wps.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20260809;

struct Options {
    std::string weights;
    long long degree = -1;
    std::string poly;
    std::string poly_file;
    long long N = -1;
    std::string format;  // empty: subcommand default (json, csv for amatrix)
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t limit_steps = wps::gb::Limits{}.max_steps;
    long long sample = 0;
    std::string out;
};

std::vector<long long> parse_weights(const std::string& text) {
    std::vector<long long> weights;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights",
                                       "'" + item + "' is not an integer");
        }
        if (pos != item.size())
            throw CLI::ValidationError("--weights",
                                       "'" + item + "' is not an integer");
        weights.push_back(value);
    }
    if (weights.empty())
        throw CLI::ValidationError("--weights", "empty weight list");
    return weights;
}

void write_output(const Options& opt, const std::string& body) {
    if (opt.out.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(opt.out);
    if (!out)
        throw wps::Error(wps::ErrorCode::IOError,
                         "cannot open '" + opt.out + "' for writing");
    out << body;
}

wps::gb::Limits limits_of(const Options& opt) {
    return wps::gb::Limits{opt.limit_steps};
}

long long require_degree(const Options& opt) {
    if (opt.degree < 1)
        throw wps::Error(wps::ErrorCode::DegreeMismatch,
                         "a positive --degree is required");
    return opt.degree;
}

void require_cartier(const wps::WeightedSpace& X, long long d) {
    if (!X.is_cartier_degree(d))
        throw wps::Error(wps::ErrorCode::NotCartierDegree,
                         "d = " + std::to_string(d) +
                             " is not a Cartier degree (lcm of weights is " +
                             std::to_string(X.lcm_weights()) + ")");
}

/// Polynomials to operate on: -f text, --poly-file (one per line), or
/// --sample K seeded dense forms.
std::vector<wps::WeightedPolynomial> gather_inputs(const wps::WeightedSpace& X,
                                                   long long d,
                                                   const Options& opt) {
    std::vector<wps::WeightedPolynomial> inputs;
    if (!opt.poly.empty())
        inputs.push_back(wps::parse_polynomial(X, d, opt.poly));
    if (!opt.poly_file.empty()) {
        std::ifstream in(opt.poly_file);
        if (!in)
            throw wps::Error(wps::ErrorCode::IOError,
                             "cannot read '" + opt.poly_file + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            inputs.push_back(wps::parse_polynomial(X, d, line));
        }
    }
    if (opt.sample > 0) {
        wps::Sampler sampler(opt.seed);
        for (long long k = 0; k < opt.sample; ++k)
            inputs.push_back(sampler.dense_form(X, d));
    }
    if (inputs.empty())
        throw wps::Error(wps::ErrorCode::SyntaxError,
                         "no polynomial given: use -f, --poly-file or --sample");
    return inputs;
}

int cmd_space(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    write_output(opt, wps::to_json(X).dump(2));
    return 0;
}

int cmd_monomials(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    auto monos = wps::enumerate_monomials(X, d);
    if (opt.format == "csv") {
        std::ostringstream os;
        for (const auto& m : monos) {
            for (std::size_t i = 0; i < m.size(); ++i)
                os << (i ? "," : "") << m[i];
            os << "\n";
        }
        write_output(opt, os.str());
        return 0;
    }
    wps::Json j;
    j["space"] = X.weights();
    j["degree"] = d;
    j["count"] = monos.size();
    wps::Json list = wps::Json::array();
    for (const auto& m : monos) list.push_back(wps::to_json(X, m));
    j["monomials"] = list;
    write_output(opt, j.dump(2));
    return 0;
}

int cmd_aut(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    write_output(opt, wps::to_json(X, wps::aut_report(X)).dump(2));
    return 0;
}

int cmd_cstar(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    write_output(opt, wps::to_json(wps::cstar_holds(X)).dump(2));
    return 0;
}

int cmd_zmin(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    require_cartier(X, d);
    wps::Json j = wps::to_json(X, wps::zmin(X, d));
    j["omega_min"] = wps::to_json(wps::omega_min(X, d));
    write_output(opt, j.dump(2));
    return 0;
}

int cmd_polytope(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    wps::HPointSet S = wps::section_polytope(X, d);
    if (opt.format == "svg") {
        write_output(opt, wps::render_svg2d(S, /*hull=*/true));
        return 0;
    }
    wps::Json j;
    j["space"] = X.weights();
    j["degree"] = d;
    j["points"] = wps::to_json(S);
    if (S.dim == 2) {
        wps::Json hull = wps::Json::array();
        for (const auto& v : wps::hull2d(S.points)) hull.push_back(wps::to_json(v));
        j["hull_vertices"] = hull;
    }
    j["origin"] = wps::torus_status_name(
        wps::to_torus_status(wps::origin_membership(S)));
    write_output(opt, j.dump(2));
    return 0;
}

int cmd_newton(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    auto inputs = gather_inputs(X, d, opt);
    if (opt.format == "svg") {
        write_output(opt, wps::render_svg2d(wps::newton_points(inputs.front()),
                                            /*hull=*/true));
        return 0;
    }
    wps::Json results = wps::Json::array();
    for (const auto& f : inputs) {
        wps::HPointSet S = wps::newton_points(f);
        wps::Json one;
        one["poly"] = f.to_string();
        one["points"] = wps::to_json(S);
        one["origin"] = wps::torus_status_name(
            wps::to_torus_status(wps::origin_membership(S)));
        results.push_back(one);
    }
    wps::Json j;
    j["space"] = X.weights();
    j["degree"] = d;
    if (opt.sample > 0) j["seed"] = opt.seed;
    j["results"] = results;
    write_output(opt, results.size() == 1 ? results[0].dump(2) : j.dump(2));
    return 0;
}

int cmd_qs(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    auto inputs = gather_inputs(X, d, opt);
    wps::Json results = wps::Json::array();
    for (const auto& f : inputs) {
        wps::Json one;
        one["poly"] = f.to_string();
        one["quasismooth"] = wps::is_quasismooth(f, limits_of(opt));
        results.push_back(one);
    }
    wps::Json j;
    j["space"] = X.weights();
    j["degree"] = d;
    if (opt.sample > 0) j["seed"] = opt.seed;
    j["results"] = results;
    write_output(opt, results.size() == 1 ? results[0].dump(2) : j.dump(2));
    return 0;
}

int cmd_fletcher(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    wps::Json j = wps::to_json(X, wps::fletcher_general(X, d));
    j["space"] = X.weights();
    j["degree"] = d;
    write_output(opt, j.dump(2));
    return 0;
}

int cmd_stability(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    require_cartier(X, d);
    auto inputs = gather_inputs(X, d, opt);
    std::optional<long long> N;
    if (opt.N >= 1) N = opt.N;
    wps::Json results = wps::Json::array();
    for (const auto& f : inputs) {
        wps::Json one = wps::to_json(wps::g_stability_certificate(f, N, limits_of(opt)));
        one["poly"] = f.to_string();
        results.push_back(one);
    }
    wps::Json j;
    j["space"] = X.weights();
    j["degree"] = d;
    if (opt.sample > 0) j["seed"] = opt.seed;
    j["results"] = results;
    write_output(opt, results.size() == 1 ? results[0].dump(2) : j.dump(2));
    return 0;
}

int cmd_amatrix(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    wps::AMatrix A = wps::a_matrix(X, d);
    if (opt.format == "json") {
        wps::Json j = wps::to_json(A);
        j["space"] = X.weights();
        j["degree"] = d;
        write_output(opt, j.dump(2));
        return 0;
    }
    std::ostringstream os;
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols(); ++c) os << (c ? "," : "") << A.at(r, c);
        os << "\n";
    }
    write_output(opt, os.str());
    return 0;
}

int cmd_nabla(const Options& opt) {
    auto X = wps::WeightedSpace::make(parse_weights(opt.weights));
    long long d = require_degree(opt);
    auto inputs = gather_inputs(X, d, opt);
    wps::Json results = wps::Json::array();
    for (const auto& f : inputs) {
        wps::Json one;
        one["poly"] = f.to_string();
        one["in_nabla_open"] = wps::in_nabla_open(f, limits_of(opt));
        one["meaning"] = "open-stratum membership: singular point on the torus";
        results.push_back(one);
    }
    wps::Json j;
    j["space"] = X.weights();
    j["degree"] = d;
    j["results"] = results;
    write_output(opt, results.size() == 1 ? results[0].dump(2) : j.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for hypersurfaces in weighted projective spaces"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_degree) {
        sub->add_option("-w,--weights", opt.weights,
                        "comma-separated weights, e.g. 1,1,2")
            ->required();
        if (needs_degree)
            sub->add_option("-d,--degree", opt.degree, "weighted degree");
        sub->add_option("--format", opt.format, "json|csv|svg");
        sub->add_option("--out", opt.out, "write output to a file");
        sub->add_option("--limit-steps", opt.limit_steps,
                        "Groebner reduction step cap")
            ->envname("WPS_LIMIT_STEPS");
        return sub;
    };
    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("-f,--poly", opt.poly, "polynomial text");
        sub->add_option("--poly-file", opt.poly_file,
                        "file with one polynomial per line");
        sub->add_option("--sample", opt.sample,
                        "sample this many seeded dense forms");
        sub->add_option("--seed", opt.seed, "sampling seed (echoed in output)");
    };

    add_common(app.add_subcommand("space", "weight vector report"), false);
    add_common(app.add_subcommand("monomials", "degree-d monomial basis"), true);
    add_common(app.add_subcommand("aut", "graded automorphism group structure"),
               false);
    add_common(app.add_subcommand("cstar", "the (C*) condition"), false);
    add_common(app.add_subcommand("zmin", "minimal weight stratum and omega_min"),
               true);
    add_common(app.add_subcommand("polytope", "section polytope"), true);
    auto* newton = add_common(
        app.add_subcommand("newton", "Newton points of a polynomial"), true);
    add_poly(newton);
    auto* qs = add_common(
        app.add_subcommand("qs", "quasismoothness of explicit polynomials"), true);
    add_poly(qs);
    add_common(app.add_subcommand("fletcher",
                                  "Fletcher criterion for the general member"),
               true);
    auto* stability = add_common(
        app.add_subcommand("stability", "torus status and G-stability certificate"),
        true);
    add_poly(stability);
    stability->add_option("-N", opt.N, "grading parameter (default d+1)");
    add_common(app.add_subcommand("amatrix", "exponent matrix (CSV by default)"),
               true);
    auto* nabla = add_common(
        app.add_subcommand("nabla", "open discriminant-stratum membership"), true);
    add_poly(nabla);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("space")) return cmd_space(opt);
        if (app.got_subcommand("monomials")) return cmd_monomials(opt);
        if (app.got_subcommand("aut")) return cmd_aut(opt);
        if (app.got_subcommand("cstar")) return cmd_cstar(opt);
        if (app.got_subcommand("zmin")) return cmd_zmin(opt);
        if (app.got_subcommand("polytope")) return cmd_polytope(opt);
        if (app.got_subcommand("newton")) return cmd_newton(opt);
        if (app.got_subcommand("qs")) return cmd_qs(opt);
        if (app.got_subcommand("fletcher")) return cmd_fletcher(opt);
        if (app.got_subcommand("stability")) return cmd_stability(opt);
        if (app.got_subcommand("amatrix")) return cmd_amatrix(opt);
        if (app.got_subcommand("nabla")) return cmd_nabla(opt);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const wps::Error& e) {
        wps::Json err;
        err["error"]["code"] = e.code_name();
        err["error"]["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        wps::Json err;
        err["error"]["code"] = "Internal";
        err["error"]["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
