#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "chowlab/field.hpp"

namespace chowlab {

// Dense matrix over an exact field. Rank, kernel and solving all go through
// plain Gaussian elimination with exact division; no pivot-size heuristics are
// needed since the arithmetic is exact.
template <class F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix out(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(field_, rows_, other.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const value_type& a = at(r, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t c = 0; c < other.cols_; ++c)
                    out.at(r, c) =
                        field_.add(out.at(r, c), field_.mul(a, other.at(k, c)));
            }
        return out;
    }

    std::vector<value_type> apply(const std::vector<value_type>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<value_type> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out[r] = field_.add(out[r], field_.mul(at(r, c), v[c]));
        return out;
    }

    std::vector<value_type> column(std::size_t c) const {
        std::vector<value_type> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    void set_column(std::size_t c, const std::vector<value_type>& v) {
        if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    static Matrix from_columns(const F& field, std::size_t rows,
                               const std::vector<std::vector<value_type>>& cols) {
        Matrix m(field, rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
        return m;
    }

    Matrix hstack(const Matrix& other) const {
        if (rows_ != other.rows_) throw std::invalid_argument("row count mismatch");
        Matrix out(field_, rows_, cols_ + other.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
            for (std::size_t c = 0; c < other.cols_; ++c)
                out.at(r, cols_ + c) = other.at(r, c);
        }
        return out;
    }

    // Row-reduces in place; returns the rank and records the pivot columns.
    std::size_t row_reduce(std::vector<std::size_t>* pivot_cols = nullptr) {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && field_.is_zero(at(pivot, col))) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
            const value_type scale = field_.inv(at(rank, col));
            for (std::size_t c = col; c < cols_; ++c)
                at(rank, c) = field_.mul(at(rank, c), scale);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank || field_.is_zero(at(r, col))) continue;
                const value_type factor = at(r, col);
                for (std::size_t c = col; c < cols_; ++c)
                    at(r, c) = field_.sub(at(r, c), field_.mul(factor, at(rank, c)));
            }
            if (pivot_cols) pivot_cols->push_back(col);
            ++rank;
        }
        return rank;
    }

    std::size_t rank() const {
        Matrix copy = *this;
        return copy.row_reduce();
    }

    // Basis of the right null space, as columns of an n x nullity matrix.
    Matrix kernel_basis() const {
        Matrix rref = *this;
        std::vector<std::size_t> pivots;
        rref.row_reduce(&pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Matrix out(field_, cols_, free_cols.size());
        for (std::size_t j = 0; j < free_cols.size(); ++j) {
            const std::size_t fc = free_cols[j];
            out.at(fc, j) = field_.one();
            for (std::size_t i = 0; i < pivots.size(); ++i)
                out.at(pivots[i], j) = field_.neg(rref.at(i, fc));
        }
        return out;
    }

    // Solves A x = b; false when inconsistent. With multiple solutions an
    // arbitrary representative (free variables zero) is returned.
    bool solve(const std::vector<value_type>& b, std::vector<value_type>& x) const {
        Matrix aug(field_, rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_) = b[r];
        }
        std::vector<std::size_t> pivots;
        const std::size_t rank = aug.row_reduce(&pivots);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (pivots[i] == cols_) return false;  // pivot in the constant column
        (void)rank;
        x.assign(cols_, field_.zero());
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
        return true;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("only square matrices invert");
        Matrix aug = hstack(identity(field_, rows_));
        const std::size_t rank = aug.row_reduce();
        if (rank != rows_) throw std::domain_error("matrix is singular");
        Matrix out(field_, rows_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < rows_; ++c) out.at(r, c) = aug.at(r, cols_ + c);
        return out;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

// Column span containment: every column of b lies in the span of a's columns.
template <class F>
bool span_contains(const Matrix<F>& a, const Matrix<F>& b) {
    return a.hstack(b).rank() == a.rank();
}

}  // namespace chowlab
