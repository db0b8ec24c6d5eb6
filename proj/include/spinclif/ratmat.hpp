#pragma once

// Dense rational vectors and matrices at desk scale (n <= ~40). Used for
// metrics, endomorphisms and the small exact solves in the uea layer.

#include <optional>
#include <stdexcept>
#include <vector>

#include "spinclif/rational.hpp"

namespace spinclif {

using RatVec = std::vector<Rational>;

class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const RatMat& x, const RatMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const RatMat& x, const RatMat& y) { return !(x == y); }

    RatMat operator-() const {
        RatMat r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    RatMat& operator+=(const RatMat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    RatMat& operator-=(const RatMat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend RatMat operator+(RatMat x, const RatMat& y) { return x += y; }
    friend RatMat operator-(RatMat x, const RatMat& y) { return x -= y; }

    friend RatMat operator*(const RatMat& x, const RatMat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        RatMat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

    friend RatMat operator*(const Rational& s, const RatMat& x) {
        RatMat r = x;
        for (auto& v : r.a_) v = s * v;
        return r;
    }

    RatVec apply(const RatVec& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector size mismatch");
        RatVec r(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    RatMat transpose() const {
        RatMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        RatMat m = *this;
        Rational d(1);
        for (int col = 0; col < cols_; ++col) {
            int piv = -1;
            for (int r = col; r < rows_; ++r)
                if (!m(r, col).is_zero()) { piv = r; break; }
            if (piv < 0) return Rational(0);
            if (piv != col) {
                for (int j = 0; j < cols_; ++j) std::swap(m(piv, j), m(col, j));
                d = -d;
            }
            d *= m(col, col);
            Rational inv = m(col, col).reciprocal();
            for (int r = col + 1; r < rows_; ++r) {
                if (m(r, col).is_zero()) continue;
                Rational f = m(r, col) * inv;
                for (int j = col; j < cols_; ++j) m(r, j) -= f * m(col, j);
            }
        }
        return d;
    }

    RatMat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        int n = rows_;
        RatMat m = *this, inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!m(r, col).is_zero()) { piv = r; break; }
            if (piv < 0) throw std::domain_error("matrix is singular");
            if (piv != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(m(piv, j), m(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            Rational f = m(col, col).reciprocal();
            for (int j = 0; j < n; ++j) { m(col, j) *= f; inv(col, j) *= f; }
            for (int r = 0; r < n; ++r) {
                if (r == col || m(r, col).is_zero()) continue;
                Rational g = m(r, col);
                for (int j = 0; j < n; ++j) {
                    m(r, j) -= g * m(col, j);
                    inv(r, j) -= g * inv(col, j);
                }
            }
        }
        return inv;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    void check_same_shape(const RatMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

// Solves A x = b exactly; returns empty optional when inconsistent.
// A may be rectangular; when underdetermined an arbitrary solution is picked.
inline std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
    int rows = a.rows(), cols = a.cols();
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("rhs size mismatch");
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!a(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(row, j));
            std::swap(b[piv], b[row]);
        }
        Rational f = a(row, col).reciprocal();
        for (int j = 0; j < cols; ++j) a(row, j) *= f;
        b[row] *= f;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Rational g = a(r, col);
            for (int j = 0; j < cols; ++j) a(r, j) -= g * a(row, j);
            b[r] -= g * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    RatVec x(cols, Rational(0));
    for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = b[r];
    return x;
}

}  // namespace spinclif
