#pragma once

// Dense exact rational matrices; just enough linear algebra for the
// generalized-metric block assembly (multiply, invert, compare).

#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

class rational_matrix {
public:
    rational_matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows * cols), rational(0)) {}

    static rational_matrix identity(int n) {
        rational_matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    rational& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const rational& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }

    friend rational_matrix operator*(const rational_matrix& a, const rational_matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        rational_matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return out;
    }

    friend rational_matrix operator+(const rational_matrix& a, const rational_matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        rational_matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }

    friend rational_matrix operator-(const rational_matrix& a, const rational_matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        rational_matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }

    rational_matrix operator-() const {
        rational_matrix out = *this;
        for (rational& v : out.data_) v = -v;
        return out;
    }

    friend bool operator==(const rational_matrix& a, const rational_matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const rational_matrix& a, const rational_matrix& b) {
        return !(a == b);
    }

    bool is_symmetric() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool is_antisymmetric() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = i; j < cols_; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    /// Gauss-Jordan inverse; throws std::domain_error on singular input.
    rational_matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        const int n = rows_;
        rational_matrix work = *this;
        rational_matrix inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (!work.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw std::domain_error("singular matrix");
            if (pivot != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(work.at(pivot, j), work.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            }
            rational p = work.at(col, col);
            for (int j = 0; j < n; ++j) {
                work.at(col, j) /= p;
                inv.at(col, j) /= p;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || work.at(r, col).is_zero()) continue;
                rational f = work.at(r, col);
                for (int j = 0; j < n; ++j) {
                    work.at(r, j) -= f * work.at(col, j);
                    inv.at(r, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    bool is_invertible() const {
        if (rows_ != cols_) return false;
        rational_matrix work = *this;
        const int n = rows_;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (!work.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return false;
            if (pivot != col)
                for (int j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            rational p = work.at(col, col);
            for (int r = col + 1; r < n; ++r) {
                if (work.at(r, col).is_zero()) continue;
                rational f = work.at(r, col) / p;
                for (int j = 0; j < n; ++j) work.at(r, j) -= f * work.at(col, j);
            }
        }
        return true;
    }

private:
    int rows_, cols_;
    std::vector<rational> data_;
};

}  // namespace koszul
