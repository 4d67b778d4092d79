#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orefree/errors.hpp"

namespace orefree {

/// Dense matrix over an exact field F; row-reduction picks the first nonzero
/// pivot so results are deterministic.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    /// In-place reduced row echelon form; returns pivot (row, col) pairs.
    std::vector<std::pair<std::size_t, std::size_t>> rref() {
        std::vector<std::pair<std::size_t, std::size_t>> pivots;
        std::size_t pr = 0;
        for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
            std::size_t sel = pr;
            while (sel < rows_ && at(sel, pc) == F(0)) ++sel;
            if (sel == rows_) continue;
            if (sel != pr)
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(pr, c));
            F inv = F(1) / at(pr, pc);
            for (std::size_t c = pc; c < cols_; ++c) at(pr, c) = at(pr, c) * inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == pr) continue;
                F factor = at(r, pc);
                if (factor == F(0)) continue;
                for (std::size_t c = pc; c < cols_; ++c) at(r, c) = at(r, c) - factor * at(pr, c);
            }
            pivots.emplace_back(pr, pc);
            ++pr;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix copy = *this;
        return copy.rref().size();
    }

    /// Basis of the right nullspace {x : Mx = 0}, from the rref free columns.
    std::vector<std::vector<F>> nullspace() const {
        Matrix copy = *this;
        auto pivots = copy.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto& [r, c] : pivots) is_pivot[c] = true;
        std::vector<std::vector<F>> basis;
        for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
            if (is_pivot[free_c]) continue;
            std::vector<F> v(cols_, F(0));
            v[free_c] = F(1);
            for (auto& [r, c] : pivots) v[c] = F(0) - copy.at(r, free_c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Solve Mx = b; nullopt when inconsistent.  With free columns, the
    /// particular solution setting them to zero is returned.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_) = b[r];
        }
        auto pivots = aug.rref();
        for (auto& [r, c] : pivots)
            if (c == cols_) return std::nullopt;
        std::vector<F> x(cols_, F(0));
        for (auto& [r, c] : pivots) x[c] = aug.at(r, cols_);
        return x;
    }

    /// Determinant by Gaussian elimination; square matrices only.
    F det() const {
        if (rows_ != cols_) throw Error("determinant of a non-square matrix");
        Matrix m = *this;
        F result(1);
        for (std::size_t pc = 0; pc < cols_; ++pc) {
            std::size_t sel = pc;
            while (sel < rows_ && m.at(sel, pc) == F(0)) ++sel;
            if (sel == rows_) return F(0);
            if (sel != pc) {
                for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(sel, c), m.at(pc, c));
                result = F(0) - result;
            }
            result = result * m.at(pc, pc);
            F inv = F(1) / m.at(pc, pc);
            for (std::size_t r = pc + 1; r < rows_; ++r) {
                F factor = m.at(r, pc) * inv;
                if (factor == F(0)) continue;
                for (std::size_t c = pc; c < cols_; ++c) m.at(r, c) = m.at(r, c) - factor * m.at(pc, c);
            }
        }
        return result;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> data_;
};

}  // namespace orefree
