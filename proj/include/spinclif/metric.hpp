#pragma once

// A finite-dimensional real vector space with a symmetric non-degenerate
// bilinear form, represented exactly over Q. Basis indices run 1..dim.

#include <stdexcept>

#include "spinclif/ratmat.hpp"

namespace spinclif {

class MetricSpace {
public:
    MetricSpace(int dim, RatMat metric) : dim_(dim), g_(std::move(metric)) {
        if (dim < 1) throw std::invalid_argument("space dimension must be positive");
        if (g_.rows() != dim || g_.cols() != dim)
            throw std::invalid_argument("metric shape does not match dimension");
        if (g_ != g_.transpose()) throw std::invalid_argument("metric must be symmetric");
        if (g_.det().is_zero()) throw std::invalid_argument("metric must be non-degenerate");
    }

    static MetricSpace euclidean(int dim) { return MetricSpace(dim, RatMat::identity(dim)); }

    // diag(+1 x p, -1 x q)
    static MetricSpace signature(int p, int q) {
        RatMat g(p + q, p + q);
        for (int i = 0; i < p; ++i) g(i, i) = Rational(1);
        for (int i = p; i < p + q; ++i) g(i, i) = Rational(-1);
        return MetricSpace(p + q, std::move(g));
    }

    int dim() const { return dim_; }
    const RatMat& matrix() const { return g_; }

    // metric on basis vectors, 1-based indices
    const Rational& g(int a, int b) const { return g_(a - 1, b - 1); }

    Rational pair(const RatVec& v, const RatVec& w) const {
        if (static_cast<int>(v.size()) != dim_ || static_cast<int>(w.size()) != dim_)
            throw std::invalid_argument("vector dimension mismatch");
        Rational acc(0);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (!g_(i, j).is_zero()) acc += v[i] * g_(i, j) * w[j];
        return acc;
    }

    bool is_null(const RatVec& v) const { return pair(v, v).is_zero(); }

    friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
        return a.dim_ == b.dim_ && a.g_ == b.g_;
    }
    friend bool operator!=(const MetricSpace& a, const MetricSpace& b) { return !(a == b); }

private:
    int dim_;
    RatMat g_;
};

}  // namespace spinclif
