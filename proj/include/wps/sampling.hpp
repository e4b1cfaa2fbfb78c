#pragma once

#include <cstdint>
#include <random>

#include "wps/polynomial.hpp"

namespace wps {

/// Seeded sampler for dense random forms. Coefficients are drawn uniformly
/// from {-9,...,9} \ {0} by reducing raw mt19937_64 output, so streams are
/// reproducible across standard-library implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long long coefficient() {
        const std::uint64_t r = rng_() % 18;
        return r < 9 ? static_cast<long long>(r) - 9
                     : static_cast<long long>(r) - 8;
    }

    /// Dense form of weighted degree d: every monomial present with a
    /// nonzero small integer coefficient.
    WeightedPolynomial dense_form(const WeightedSpace& X, long long d) {
        WeightedPolynomial f(X, d);
        for (const ExponentVector& m : enumerate_monomials(X, d))
            f.add_term(m, Rational(coefficient()));
        return f;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace wps
