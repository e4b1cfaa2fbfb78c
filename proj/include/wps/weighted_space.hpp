#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "wps/errors.hpp"

namespace wps {

/// One distinct weight b together with its multiplicity n among the a_i.
struct WeightBlock {
    long long weight = 0;
    int count = 0;

    friend bool operator==(const WeightBlock&, const WeightBlock&) = default;
};

/// The weight vector (a_0,...,a_n) of a weighted projective space, sorted
/// ascending, with its partition into distinct-weight blocks b_1 < ... < b_l
/// and the variable names used by the parser and printers.
///
/// Immutable after construction; safe to copy and share across threads.
class WeightedSpace {
public:
    static WeightedSpace make(std::vector<long long> weights) {
        return make(std::move(weights), {});
    }

    static WeightedSpace make(std::vector<long long> weights,
                              std::vector<std::string> names) {
        if (weights.size() < 2)
            throw Error(ErrorCode::TooFewVariables,
                        "need at least two weights (n >= 1)");
        for (long long a : weights)
            if (a < 1)
                throw Error(ErrorCode::NotWellFormed,
                            "weights must be positive integers");
        if (!names.empty() && names.size() != weights.size())
            throw Error(ErrorCode::UnknownVariable,
                        "variable name count does not match weight count");

        WeightedSpace X;
        if (names.empty()) {
            std::sort(weights.begin(), weights.end());
            X.weights_ = std::move(weights);
            X.names_ = default_names(X.weights_.size());
        } else {
            std::vector<std::pair<long long, std::string>> paired;
            paired.reserve(weights.size());
            for (std::size_t i = 0; i < weights.size(); ++i)
                paired.emplace_back(weights[i], std::move(names[i]));
            std::stable_sort(paired.begin(), paired.end(),
                             [](const auto& a, const auto& b) {
                                 return a.first < b.first;
                             });
            for (auto& [a, name] : paired) {
                X.weights_.push_back(a);
                X.names_.push_back(std::move(name));
            }
        }

        X.check_well_formed();

        for (long long a : X.weights_) {
            if (!X.blocks_.empty() && X.blocks_.back().weight == a)
                ++X.blocks_.back().count;
            else
                X.blocks_.push_back({a, 1});
        }
        return X;
    }

    /// Number of variables, n+1.
    int var_count() const { return static_cast<int>(weights_.size()); }

    /// Projective dimension n.
    int dim() const { return var_count() - 1; }

    long long weight(int i) const { return weights_.at(i); }
    const std::vector<long long>& weights() const { return weights_; }
    const std::vector<WeightBlock>& blocks() const { return blocks_; }

    long long max_weight() const { return weights_.back(); }

    /// Multiplicity n_l of the maximal weight.
    int max_block_size() const { return blocks_.back().count; }

    /// Index of the first variable of maximal weight.
    int max_block_start() const { return var_count() - max_block_size(); }

    bool is_maximal(int i) const { return weights_.at(i) == max_weight(); }

    long long lcm_weights() const {
        long long l = 1;
        for (long long a : weights_) l = std::lcm(l, a);
        return l;
    }

    bool is_cartier_degree(long long d) const {
        return d >= 1 && d % lcm_weights() == 0;
    }

    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Resolve a variable name, including the x0..xn aliases (and x,y,z
    /// when those are not the primary names). Returns -1 if unknown.
    int index_of(std::string_view name) const {
        for (int i = 0; i < var_count(); ++i)
            if (names_[i] == name) return i;
        if (name.size() >= 2 && name[0] == 'x') {
            bool digits = true;
            for (std::size_t k = 1; k < name.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(name[k]))) digits = false;
            if (digits) {
                long long idx = 0;
                for (std::size_t k = 1; k < name.size(); ++k)
                    idx = idx * 10 + (name[k] - '0');
                if (idx < var_count()) return static_cast<int>(idx);
            }
        }
        if (var_count() <= 3 && name.size() == 1) {
            if (name[0] == 'x') return 0;
            if (name[0] == 'y' && var_count() >= 2) return 1;
            if (name[0] == 'z' && var_count() >= 3) return 2;
        }
        return -1;
    }

    friend bool operator==(const WeightedSpace& a, const WeightedSpace& b) {
        return a.weights_ == b.weights_;
    }

private:
    WeightedSpace() = default;

    static std::vector<std::string> default_names(std::size_t count) {
        if (count == 2) return {"x", "y"};
        if (count == 3) return {"x", "y", "z"};
        std::vector<std::string> names;
        for (std::size_t i = 0; i < count; ++i)
            names.push_back("x" + std::to_string(i));
        return names;
    }

    void check_well_formed() {
        const int m = var_count();
        if (m == 2) {
            // Degenerate n = 1 case: the drop-one rule would force both
            // weights to be 1, so we require coprimality of the pair instead.
            if (std::gcd(weights_[0], weights_[1]) != 1)
                throw Error(ErrorCode::NotWellFormed,
                            "weights (" + std::to_string(weights_[0]) + "," +
                                std::to_string(weights_[1]) +
                                ") have a common factor");
            return;
        }
        for (int drop = 0; drop < m; ++drop) {
            long long g = 0;
            for (int i = 0; i < m; ++i)
                if (i != drop) g = std::gcd(g, weights_[i]);
            if (g != 1)
                throw Error(ErrorCode::NotWellFormed,
                            "the " + std::to_string(m - 1) +
                                " weights omitting a_" + std::to_string(drop) +
                                " have gcd " + std::to_string(g));
        }
    }

    std::vector<long long> weights_;
    std::vector<WeightBlock> blocks_;
    std::vector<std::string> names_;
};

}  // namespace wps
