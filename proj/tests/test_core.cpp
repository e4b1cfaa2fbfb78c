#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_seeds.hpp"
#include "wps/parser.hpp"
#include "wps/polynomial.hpp"
#include "wps/sampling.hpp"

using namespace wps;

namespace {

ExponentVector ev(std::initializer_list<long long> v) { return ExponentVector(v); }

TEST(WeightedSpaceTest, MakeSpaceComputesBlocks) {
    auto X = WeightedSpace::make({1, 1, 2});
    EXPECT_EQ(X.weights(), (std::vector<long long>{1, 1, 2}));
    ASSERT_EQ(X.blocks().size(), 2u);
    EXPECT_EQ(X.blocks()[0], (WeightBlock{1, 2}));
    EXPECT_EQ(X.blocks()[1], (WeightBlock{2, 1}));

    auto P2 = WeightedSpace::make({1, 1, 1});
    ASSERT_EQ(P2.blocks().size(), 1u);
    EXPECT_EQ(P2.blocks()[0], (WeightBlock{1, 3}));
}

TEST(WeightedSpaceTest, SortsWeightsAscending) {
    auto X = WeightedSpace::make({3, 1, 2});
    EXPECT_EQ(X.weights(), (std::vector<long long>{1, 2, 3}));
}

TEST(WeightedSpaceTest, RejectsIllFormedSpaces) {
    try {
        WeightedSpace::make({2, 2, 4});
        FAIL() << "expected NotWellFormed";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotWellFormed);
    }
    EXPECT_THROW(WeightedSpace::make({2, 2}), Error);
    EXPECT_THROW(WeightedSpace::make({0, 1}), Error);
    try {
        WeightedSpace::make({5});
        FAIL() << "expected TooFewVariables";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooFewVariables);
    }
    // Degenerate n = 1 case admits coprime pairs.
    EXPECT_NO_THROW(WeightedSpace::make({2, 3}));
}

TEST(WeightedSpaceTest, CartierDegrees) {
    auto X = WeightedSpace::make({1, 1, 2});
    EXPECT_TRUE(X.is_cartier_degree(4));
    EXPECT_FALSE(X.is_cartier_degree(3));
    EXPECT_TRUE(WeightedSpace::make({1, 2, 3}).is_cartier_degree(6));
    EXPECT_FALSE(WeightedSpace::make({1, 2, 3}).is_cartier_degree(4));
}

TEST(MonomialTest, CanonicalOrderReproducesPaperColumns) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto monos = enumerate_monomials(X, 4);
    std::vector<ExponentVector> expected = {
        ev({4, 0, 0}), ev({3, 1, 0}), ev({2, 2, 0}), ev({1, 3, 0}), ev({0, 4, 0}),
        ev({2, 0, 1}), ev({1, 1, 1}), ev({0, 2, 1}), ev({0, 0, 2})};
    EXPECT_EQ(monos, expected);
}

TEST(MonomialTest, DegreeTwoBasis) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto monos = enumerate_monomials(X, 2);
    std::vector<ExponentVector> expected = {ev({2, 0, 0}), ev({1, 1, 0}),
                                            ev({0, 2, 0}), ev({0, 0, 1})};
    EXPECT_EQ(monos, expected);
}

TEST(MonomialTest, EmptyWhenNoSolutions) {
    EXPECT_TRUE(enumerate_monomials(WeightedSpace::make({2, 3}), 1).empty());
}

TEST(MonomialTest, GradedDimensionExamples) {
    EXPECT_EQ(graded_dimension(WeightedSpace::make({1, 1, 2}), 4), 9);
    EXPECT_EQ(graded_dimension(WeightedSpace::make({1, 1, 1, 2}), 2), 7);
    // L = C(n-1+r, r) counts the unipotent directions for P(1,..,1,r).
    EXPECT_EQ(graded_dimension(WeightedSpace::make({1, 1, 1, 2}), 2) - 1, 6);
}

TEST(MonomialTest, CountMatchesGeneratingFunctionOracle) {
    std::vector<std::vector<long long>> family = {
        {1, 1, 2}, {1, 1, 3}, {1, 2, 3}, {1, 1, 1, 2}, {2, 2, 3, 3, 5}, {2, 3}};
    for (const auto& w : family) {
        auto X = WeightedSpace::make(w);
        for (long long d = 1; d <= 16; ++d) {
            SCOPED_TRACE("d=" + std::to_string(d));
            EXPECT_EQ(graded_dimension(X, d),
                      oracles::series_monomial_count(X.weights(), d));
        }
    }
}

TEST(MonomialTest, EnumeratedVectorsHaveRightDegree) {
    auto X = WeightedSpace::make({2, 2, 3, 3, 5});
    for (const auto& m : enumerate_monomials(X, 20))
        EXPECT_EQ(weighted_degree(X, m), 20);
}

TEST(ParserTest, ParsesFigureExample) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto f = parse_polynomial(X, 4, "x*y^3 + x^2*z + y^2*z + z^2");
    EXPECT_EQ(f.term_count(), 4u);
    EXPECT_EQ(f.coefficient(ev({1, 3, 0})), Rational(1));
    EXPECT_EQ(f.coefficient(ev({0, 0, 2})), Rational(1));
}

TEST(ParserTest, DegreeMismatchReportsTerm) {
    auto X = WeightedSpace::make({1, 1, 2});
    try {
        parse_polynomial(X, 4, "x^3");
        FAIL() << "expected DegreeMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
        EXPECT_NE(std::string(e.what()).find("x^3"), std::string::npos);
    }
}

TEST(ParserTest, CancellationNormalizes) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto f = parse_polynomial(X, 4, "2*z^2 - z^2");
    EXPECT_EQ(f.term_count(), 1u);
    EXPECT_EQ(f.coefficient(ev({0, 0, 2})), Rational(1));

    auto zero = parse_polynomial(X, 4, "z^2 - z^2");
    EXPECT_TRUE(zero.is_zero());
}

TEST(ParserTest, RationalCoefficientsAndAliases) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto f = parse_polynomial(X, 4, "3/2*x0^2*x2 - 1/3*x1^4");
    EXPECT_EQ(f.coefficient(ev({2, 0, 1})), Rational(3, 2));
    EXPECT_EQ(f.coefficient(ev({0, 4, 0})), Rational(-1, 3));
}

TEST(ParserTest, SyntaxErrorsReportPosition) {
    auto X = WeightedSpace::make({1, 1, 2});
    for (const char* bad : {"x^4 +", "x^", "* x", "2/", "x^4 + + y^4", ""}) {
        try {
            parse_polynomial(X, 4, bad);
            FAIL() << "expected SyntaxError for '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::SyntaxError) << bad;
            EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
        }
    }
    try {
        parse_polynomial(X, 4, "x*w^3");
        FAIL() << "expected UnknownVariable";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownVariable);
    }
}

TEST(ParserTest, ParsePrintIsIdentityOnCanonicalForms) {
    auto X = WeightedSpace::make({1, 1, 2});
    Sampler sampler(seeds::kUnitProps);
    for (int k = 0; k < 25; ++k) {
        auto f = sampler.dense_form(X, 4);
        auto g = parse_polynomial(X, 4, f.to_string());
        EXPECT_EQ(f, g);
        EXPECT_EQ(f.to_string(), g.to_string());
    }
    auto X4 = WeightedSpace::make({1, 1, 1, 2});
    for (int k = 0; k < 10; ++k) {
        auto f = Sampler(seeds::kUnitProps + k).dense_form(X4, 4);
        EXPECT_EQ(parse_polynomial(X4, 4, f.to_string()), f);
    }
}

TEST(PolynomialTest, PartialDerivativeExamples) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto z2 = parse_polynomial(X, 4, "z^2");
    auto dz = z2.partial_derivative(2);
    EXPECT_EQ(dz.coefficient(ev({0, 0, 1})), Rational(2));
    EXPECT_EQ(dz.degree(), 2);

    auto fermat = parse_polynomial(X, 4, "x^4 + y^4 + z^2");
    auto dx = fermat.partial_derivative(0);
    EXPECT_EQ(dx.term_count(), 1u);
    EXPECT_EQ(dx.coefficient(ev({3, 0, 0})), Rational(4));

    EXPECT_TRUE(parse_polynomial(X, 4, "y^4").partial_derivative(0).is_zero());
    EXPECT_THROW(fermat.partial_derivative(3), Error);
}

TEST(PolynomialTest, WeightedEulerIdentity) {
    // sum a_i x_i df/dx_i = d f, exactly, for random dense forms.
    std::vector<std::pair<std::vector<long long>, long long>> family = {
        {{1, 1, 2}, 4}, {{1, 1, 3}, 6}, {{1, 2, 3}, 6}, {{1, 1, 1, 2}, 4}};
    Sampler sampler(seeds::kUnitProps);
    for (const auto& [w, d] : family) {
        auto X = WeightedSpace::make(w);
        for (int k = 0; k < 10; ++k) {
            auto f = sampler.dense_form(X, d);
            WeightedPolynomial sum(X, d);
            for (int i = 0; i < X.var_count(); ++i) {
                ExponentVector xi(X.var_count(), 0);
                xi[i] = 1;
                sum += WeightedPolynomial::monomial(X, xi, Rational(X.weight(i))) *
                       f.partial_derivative(i);
            }
            EXPECT_EQ(sum, f * Rational(d));
        }
    }
}

TEST(PolynomialTest, SubstitutionExamples) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto f = parse_polynomial(X, 4, "z^2");
    std::map<int, WeightedPolynomial> subst;
    subst.emplace(2, parse_polynomial(X, 2, "z + x^2"));
    EXPECT_EQ(apply_substitution(f, subst),
              parse_polynomial(X, 4, "z^2 + 2*x^2*z + x^4"));

    // identity substitution
    std::map<int, WeightedPolynomial> ident;
    ident.emplace(0, parse_polynomial(X, 1, "x"));
    auto g = parse_polynomial(X, 4, "x*y^3 + z^2");
    EXPECT_EQ(apply_substitution(g, ident), g);
}

TEST(PolynomialTest, SubstitutionGradingViolation) {
    auto X = WeightedSpace::make({1, 1, 2});
    std::map<int, WeightedPolynomial> bad;
    bad.emplace(0, parse_polynomial(X, 2, "z"));  // weight-2 value for x
    try {
        apply_substitution(parse_polynomial(X, 4, "x^4"), bad);
        FAIL() << "expected GradingViolation";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GradingViolation);
    }
}

TEST(PolynomialTest, SubstitutionIsFunctorial) {
    auto X = WeightedSpace::make({1, 1, 2});
    Sampler sampler(seeds::kUnitProps);
    for (int k = 0; k < 10; ++k) {
        auto f = sampler.dense_form(X, 4);
        // u: z -> z + p(x,y), v: x -> x + y (a Levi move), z -> z + q
        std::map<int, WeightedPolynomial> u, v;
        u.emplace(2, parse_polynomial(X, 2, "z") + sampler.dense_form(X, 2).slice(2, 0));
        v.emplace(0, parse_polynomial(X, 1, "x + y"));
        v.emplace(2, parse_polynomial(X, 2, "z") + sampler.dense_form(X, 2).slice(2, 0));

        auto lhs = apply_substitution(apply_substitution(f, u), v);
        std::map<int, WeightedPolynomial> composed = v;
        for (const auto& [i, val] : u) {
            auto it = composed.find(i);
            auto uv = apply_substitution(val, v);
            if (it == composed.end())
                composed.emplace(i, uv);
            else
                it->second = uv;
        }
        auto rhs = apply_substitution(f, composed);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(PolynomialTest, PowerExpansion) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto binomial = parse_polynomial(X, 2, "z + x^2");
    EXPECT_EQ(binomial.pow(2), parse_polynomial(X, 4, "z^2 + 2*x^2*z + x^4"));
}

TEST(PolynomialTest, ToStringFormatsSignsAndRationals) {
    auto X = WeightedSpace::make({1, 1, 2});
    auto f = parse_polynomial(X, 4, "-x^4 + 1/2*z^2 - 3*x*y^3");
    EXPECT_EQ(f.to_string(), "-x^4 - 3*x*y^3 + 1/2*z^2");
    EXPECT_EQ(WeightedPolynomial(X, 4).to_string(), "0");
}

}  // namespace
