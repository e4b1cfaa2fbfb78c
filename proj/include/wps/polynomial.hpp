#pragma once

#include <map>
#include <string>
#include <vector>

#include "wps/monomial.hpp"
#include "wps/rational.hpp"

namespace wps {

/// Sparse weighted-homogeneous polynomial with exact rational coefficients.
/// Every stored term has weighted degree exactly degree(); no zero
/// coefficients are stored. The zero polynomial (empty term map) is a
/// first-class value so partial derivatives always have a home.
class WeightedPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    WeightedPolynomial(WeightedSpace space, long long degree)
        : space_(std::move(space)), degree_(degree) {}

    static WeightedPolynomial from_terms(WeightedSpace space, long long degree,
                                         TermMap terms) {
        WeightedPolynomial f(std::move(space), degree);
        for (auto& [m, c] : terms) {
            if (c == 0) continue;
            f.check_term(m);
            f.terms_.emplace(m, std::move(c));
        }
        return f;
    }

    static WeightedPolynomial monomial(const WeightedSpace& space,
                                       const ExponentVector& m,
                                       Rational c = Rational(1)) {
        TermMap t;
        t.emplace(m, std::move(c));
        return from_terms(space, weighted_degree(space, m), std::move(t));
    }

    const WeightedSpace& space() const { return space_; }
    long long degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const ExponentVector& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExponentVector& m, const Rational& c) {
        if (c == 0) return;
        check_term(m);
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    WeightedPolynomial& operator+=(const WeightedPolynomial& g) {
        require_same_space(g);
        if (!g.is_zero() && !is_zero() && g.degree_ != degree_)
            throw Error(ErrorCode::DegreeMismatch,
                        "cannot add forms of degrees " + std::to_string(degree_) +
                            " and " + std::to_string(g.degree_));
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }

    WeightedPolynomial operator+(const WeightedPolynomial& g) const {
        WeightedPolynomial r = *this;
        r += g;
        return r;
    }

    WeightedPolynomial operator-() const {
        WeightedPolynomial r(space_, degree_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    WeightedPolynomial operator-(const WeightedPolynomial& g) const {
        return *this + (-g);
    }

    WeightedPolynomial operator*(const Rational& s) const {
        WeightedPolynomial r(space_, degree_);
        if (s == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    /// Product of homogeneous forms; degrees add.
    WeightedPolynomial operator*(const WeightedPolynomial& g) const {
        require_same_space(g);
        WeightedPolynomial r(space_, degree_ + g.degree_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : g.terms_) {
                ExponentVector m = ma;
                for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
                auto [it, inserted] = r.terms_.emplace(m, ca * cb);
                if (!inserted) {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    WeightedPolynomial pow(long long e) const {
        WeightedPolynomial acc =
            monomial(space_, ExponentVector(space_.var_count(), 0));
        for (long long k = 0; k < e; ++k) acc = acc * *this;
        return acc;
    }

    /// Formal partial derivative with respect to variable i; the result is
    /// homogeneous of weighted degree d - a_i and may be zero.
    WeightedPolynomial partial_derivative(int i) const {
        if (i < 0 || i >= space_.var_count())
            throw Error(ErrorCode::IndexOutOfRange,
                        "variable index " + std::to_string(i) + " out of range");
        WeightedPolynomial r(space_, degree_ - space_.weight(i));
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            ExponentVector dm = m;
            dm[i] -= 1;
            r.terms_.emplace(dm, c * m[i]);
        }
        return r;
    }

    /// Terms whose exponent of variable i equals e, with that variable
    /// divided out: the coefficient of x_i^e as a polynomial in the others.
    WeightedPolynomial slice(int i, long long e) const {
        WeightedPolynomial r(space_, degree_ - e * space_.weight(i));
        for (const auto& [m, c] : terms_) {
            if (m[i] != e) continue;
            ExponentVector sm = m;
            sm[i] = 0;
            r.terms_.emplace(sm, c);
        }
        return r;
    }

    /// Canonical text form: terms in canonical monomial order, "p/q" rational
    /// coefficients, "*" separators, "^k" powers. The zero polynomial is "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const TermMap::value_type*> ordered;
        for (const auto& t : terms_) ordered.push_back(&t);
        std::sort(ordered.begin(), ordered.end(), [&](auto* a, auto* b) {
            return canonical_monomial_less(space_, a->first, b->first);
        });
        std::string out;
        bool first = true;
        for (auto* t : ordered) {
            const Rational& c = t->second;
            Rational abs_c = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string mono = format_monomial(space_, t->first);
            if (abs_c != 1 || mono == "1") {
                out += wps::to_string(abs_c);
                if (mono != "1") out += "*";
            }
            if (mono != "1") out += mono;
        }
        return out;
    }

    friend bool operator==(const WeightedPolynomial& a,
                           const WeightedPolynomial& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_ &&
               (a.is_zero() || a.degree_ == b.degree_);
    }

private:
    void check_term(const ExponentVector& m) const {
        if (static_cast<int>(m.size()) != space_.var_count())
            throw Error(ErrorCode::NonHomogeneousInput,
                        "exponent vector has wrong length");
        for (long long e : m)
            if (e < 0)
                throw Error(ErrorCode::NonHomogeneousInput,
                            "negative exponent");
        if (weighted_degree(space_, m) != degree_)
            throw Error(ErrorCode::DegreeMismatch,
                        "term " + format_monomial(space_, m) +
                            " has weighted degree " +
                            std::to_string(weighted_degree(space_, m)) +
                            ", expected " + std::to_string(degree_));
    }

    void require_same_space(const WeightedPolynomial& g) const {
        if (!(space_ == g.space_))
            throw Error(ErrorCode::GradingViolation,
                        "operands live in different weighted spaces");
    }

    WeightedSpace space_;
    long long degree_;
    TermMap terms_;
};

/// Replace variables by weighted-homogeneous values of matching weight and
/// expand. Variables absent from subst are left alone.
inline WeightedPolynomial apply_substitution(
    const WeightedPolynomial& f,
    const std::map<int, WeightedPolynomial>& subst) {
    const WeightedSpace& X = f.space();
    for (const auto& [i, value] : subst) {
        if (i < 0 || i >= X.var_count())
            throw Error(ErrorCode::IndexOutOfRange,
                        "substituted variable index out of range");
        if (!(value.space() == X))
            throw Error(ErrorCode::GradingViolation,
                        "substituted value lives in a different space");
        if (!value.is_zero() && value.degree() != X.weight(i))
            throw Error(ErrorCode::GradingViolation,
                        "value substituted for " + X.name(i) +
                            " has weighted degree " +
                            std::to_string(value.degree()) + ", expected " +
                            std::to_string(X.weight(i)));
    }
    WeightedPolynomial result(X, f.degree());
    for (const auto& [m, c] : f.terms()) {
        WeightedPolynomial term =
            WeightedPolynomial::monomial(X, ExponentVector(X.var_count(), 0), c);
        for (int i = 0; i < X.var_count(); ++i) {
            if (m[i] == 0) continue;
            auto it = subst.find(i);
            if (it == subst.end()) {
                ExponentVector pure(X.var_count(), 0);
                pure[i] = m[i];
                term = term * WeightedPolynomial::monomial(X, pure);
            } else {
                term = term * it->second.pow(m[i]);
            }
        }
        if (!term.is_zero()) result += term;
    }
    return result;
}

}  // namespace wps
