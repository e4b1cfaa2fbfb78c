#pragma once

#include <vector>

#include "wps/errors.hpp"
#include "wps/rational.hpp"

namespace wps {

/// Exact two-phase tableau simplex with Bland's rule (deterministic pivoting,
/// guaranteed termination). Solves  max c.x  s.t.  A x = b, x >= 0.
struct LpResult {
    enum class Status { Infeasible, Optimal, Unbounded };
    Status status = Status::Infeasible;
    Rational objective;
    std::vector<Rational> x;
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(const std::vector<std::vector<Rational>>& A,
                   const std::vector<Rational>& b, std::size_t nvars)
        : nvars_(nvars) {
        for (std::size_t i = 0; i < A.size(); ++i) {
            std::vector<Rational> row = A[i];
            row.push_back(b[i]);
            if (row.back() < 0)
                for (Rational& v : row) v = -v;
            rows_.push_back(std::move(row));
        }
    }

    LpResult solve(const std::vector<Rational>& c) {
        const std::size_t m = rows_.size();
        // Phase 1: adjoin artificial columns and minimize their sum.
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < m; ++k) {
                Rational v(i == k ? 1 : 0);
                rows_[k].insert(rows_[k].end() - 1, v);
            }
            basis_.push_back(nvars_ + i);
        }
        ncols_ = nvars_ + m;
        std::vector<Rational> phase1(ncols_, Rational(0));
        for (std::size_t j = nvars_; j < ncols_; ++j) phase1[j] = Rational(-1);
        build_objective(phase1);
        run();
        if (obj_.back() < 0) return {LpResult::Status::Infeasible, Rational(0), {}};

        // Pivot remaining artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < nvars_) {
                ++i;
                continue;
            }
            std::size_t enter = nvars_;
            for (std::size_t j = 0; j < nvars_; ++j)
                if (rows_[i][j] != 0) {
                    enter = j;
                    break;
                }
            if (enter == nvars_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                pivot(i, enter);
                ++i;
            }
        }
        // Drop artificial columns and run phase 2 on the real objective.
        for (auto& row : rows_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(nvars_), row.end() - 1);
        ncols_ = nvars_;
        build_objective(c);
        if (!run()) return {LpResult::Status::Unbounded, Rational(0), {}};

        LpResult result;
        result.status = LpResult::Status::Optimal;
        result.objective = obj_.back();
        result.x.assign(nvars_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            result.x[basis_[i]] = rows_[i].back();
        return result;
    }

private:
    void build_objective(const std::vector<Rational>& c) {
        obj_.assign(ncols_ + 1, Rational(0));
        for (std::size_t j = 0; j < ncols_; ++j) obj_[j] = -c[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational coeff = c[basis_[i]];
            if (coeff == 0) continue;
            for (std::size_t j = 0; j <= ncols_; ++j)
                obj_[j] += coeff * rows_[i][j];
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) obj_[basis_[i]] = Rational(0);
    }

    /// Returns false on unboundedness.
    bool run() {
        while (true) {
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j)
                if (obj_[j] < 0) {  // Bland: lowest eligible index enters
                    enter = j;
                    break;
                }
            if (enter == ncols_) return true;
            std::size_t leave = rows_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i].back() / rows_[i][enter];
                if (leave == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t p, std::size_t e) {
        const Rational piv = rows_[p][e];
        for (Rational& v : rows_[p]) v /= piv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == p || rows_[i][e] == 0) continue;
            const Rational factor = rows_[i][e];
            for (std::size_t j = 0; j <= ncols_; ++j)
                rows_[i][j] -= factor * rows_[p][j];
        }
        if (obj_[e] != 0) {
            const Rational factor = obj_[e];
            for (std::size_t j = 0; j <= ncols_; ++j)
                obj_[j] -= factor * rows_[p][j];
        }
        basis_[p] = e;
    }

    std::size_t nvars_;
    std::size_t ncols_ = 0;
    std::vector<std::vector<Rational>> rows_;  // each row ends with b
    std::vector<Rational> obj_;                // reduced costs, then value
    std::vector<std::size_t> basis_;
};

}  // namespace detail

inline LpResult solve_lp_max(const std::vector<std::vector<Rational>>& A,
                             const std::vector<Rational>& b,
                             const std::vector<Rational>& c) {
    if (A.size() != b.size())
        throw Error(ErrorCode::IndexOutOfRange, "LP row count mismatch");
    const std::size_t nvars = c.size();
    for (const auto& row : A)
        if (row.size() != nvars)
            throw Error(ErrorCode::IndexOutOfRange, "LP column count mismatch");
    return detail::SimplexTableau(A, b, nvars).solve(c);
}

}  // namespace wps
