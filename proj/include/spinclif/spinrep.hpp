#pragma once

// Concrete spin-s matrices as a floating-point oracle for the symbolic core.
// Convention: J_a = -i S_a with S_a the standard Hermitian angular-momentum
// matrices from the ladder construction, so [Ja,Jb] = sum_c eps_abc Jc and
// sum_a Ja^2 = -s(s+1) I. This is the only module that touches doubles.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "spinclif/pbw.hpp"
#include "spinclif/rational.hpp"

namespace spinclif {

using Complex = std::complex<double>;

class CMat {
public:
    CMat() : n_(0) {}
    explicit CMat(int n) : n_(n), a_(n * n, Complex(0, 0)) {}

    static CMat identity(int n) {
        CMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int size() const { return n_; }
    Complex& operator()(int i, int j) { return a_[i * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[i * n_ + j]; }

    CMat operator-() const {
        CMat r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    CMat& operator+=(const CMat& o) {
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend CMat operator+(CMat x, const CMat& y) { return x += y; }
    friend CMat operator-(CMat x, const CMat& y) { return x -= y; }
    friend CMat operator*(const CMat& x, const CMat& y) {
        CMat r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                Complex v = x(i, k);
                if (v == Complex(0, 0)) continue;
                for (int j = 0; j < x.n_; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }
    friend CMat operator*(Complex s, CMat x) {
        for (auto& v : x.a_) v *= s;
        return x;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    Complex trace() const {
        Complex t = 0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    int n_;
    std::vector<Complex> a_;
};

inline CMat commutator(const CMat& x, const CMat& y) { return x * y - y * x; }

struct SpinRep {
    HalfInt s;
    std::array<CMat, 3> j;  // J1, J2, J3

    int dim() const { return s.dim(); }
};

// Ladder construction on the m = s..-s basis.
inline SpinRep spin_matrices(HalfInt s) {
    const int d = s.dim();
    const double sv = s.twice() / 2.0;
    CMat sp(d), sm(d), s3(d);
    for (int i = 0; i < d; ++i) {
        double m = sv - i;
        s3(i, i) = m;
        if (i > 0) sp(i - 1, i) = std::sqrt(sv * (sv + 1) - m * (m + 1));
        if (i + 1 < d) sm(i + 1, i) = std::sqrt(sv * (sv + 1) - m * (m - 1));
    }
    const Complex mi(0, -1), half(0.5, 0), mihalf(0, -0.5);
    SpinRep rep{s, {CMat(d), CMat(d), CMat(d)}};
    // S1 = (S+ + S-)/2, S2 = (S+ - S-)/(2i); Ja = -i Sa
    rep.j[0] = mi * (half * (sp + sm));
    rep.j[1] = mi * (mihalf * (sp - sm));
    rep.j[2] = mi * s3;
    return rep;
}

// Algebra morphism: generator words map to matrix products.
inline CMat evaluate(const ElementQ& x, const SpinRep& rep) {
    if (x.dim() != 3) throw std::invalid_argument("evaluate: expected an element over the 3 generators");
    const int d = rep.dim();
    CMat acc(d);
    for (const auto& [w, c] : x.terms()) {
        CMat prod = CMat::identity(d);
        for (size_t i = 0; i < w.size(); ++i) prod = prod * rep.j[w[i] - 1];
        acc += Complex(c.to_double(), 0) * prod;
    }
    return acc;
}

inline CMat evaluate(const PBWElement& x, const SpinRep& rep) { return evaluate(x.as_free(), rep); }

// ad(C + shift) as a matrix operation: X -> sum_a [Ja,[Ja,X]] + shift X.
inline CMat ad_casimir_matrix(const CMat& x, const SpinRep& rep) {
    CMat acc(rep.dim());
    for (int a = 0; a < 3; ++a) acc += commutator(rep.j[a], commutator(rep.j[a], x));
    return acc;
}

// The multipole recursion carried out directly in the representation. Since
// evaluation is an algebra morphism commuting with ad and left multiplication,
// this equals evaluate(multipole(k, word)) without building the symbolic
// multipole first - an independent numeric route.
inline CMat multipole_matrix(int k, const std::vector<int>& word, const SpinRep& rep) {
    if (static_cast<int>(word.size()) != k)
        throw std::invalid_argument("multipole_matrix: word length must equal k");
    const int d = rep.dim();
    if (k == 0) return CMat::identity(d);
    CMat acc = rep.j[word[k - 1] - 1];
    for (int i = k - 2; i >= 0; --i) {
        int m = k - 1 - i;
        CMat x = rep.j[word[i] - 1] * acc;
        CMat y = ad_casimir_matrix(x, rep) + Complex(double(m * (m + 1)), 0) * x;
        CMat z = ad_casimir_matrix(y, rep) + Complex(double(m * (m - 1)), 0) * y;
        acc = Complex(1.0 / (4 * (m + 1) * (2 * m + 1)), 0) * z;
    }
    return acc;
}

inline std::vector<std::vector<int>> all_words(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(k, 1);
    while (true) {
        out.push_back(w);
        int i = k - 1;
        while (i >= 0 && w[i] == n) { w[i] = 1; --i; }
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

struct SpinIdealReport {
    HalfInt s;
    double max_top_residual = 0;   // largest |entry| over order-(2s+1) multipole images
    double min_lower_norm = 1e300; // smallest max-|entry| over orders k <= 2s
    bool pass = false;
};

// Order-(2s+1) multipole images must vanish in the spin-s representation
// while every lower order survives.
inline SpinIdealReport verify_spin_ideal(HalfInt s, double top_tol = 1e-9, double lower_tol = 1e-6) {
    SpinRep rep = spin_matrices(s);
    SpinIdealReport report;
    report.s = s;
    const int top = s.twice() + 1;
    for (const auto& w : all_words(3, top))
        report.max_top_residual = std::max(report.max_top_residual, multipole_matrix(top, w, rep).max_abs());
    for (int k = 0; k <= s.twice(); ++k)
        for (const auto& w : all_words(3, k))
            report.min_lower_norm = std::min(report.min_lower_norm, multipole_matrix(k, w, rep).max_abs());
    report.pass = report.max_top_residual < top_tol && report.min_lower_norm > lower_tol;
    return report;
}

namespace detail {

// Singular values of a row-stacked matrix by one-sided Jacobi (Hestenes):
// rotate row pairs until mutually orthogonal; the row norms are the singular
// values, at full working precision.
inline std::vector<double> singular_values(std::vector<std::vector<double>> rows) {
    const size_t m = rows.size();
    if (m == 0) return {};
    auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    std::vector<double> norm2(m);
    for (size_t i = 0; i < m; ++i) norm2[i] = dot(rows[i], rows[i]);
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                if (norm2[i] == 0 || norm2[j] == 0) continue;
                double c = dot(rows[i], rows[j]);
                if (std::abs(c) <= 1e-15 * std::sqrt(norm2[i] * norm2[j]) || c == 0) continue;
                rotated = true;
                double zeta = (norm2[j] - norm2[i]) / (2 * c);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double cs = 1 / std::sqrt(1 + t * t), sn = cs * t;
                for (size_t k = 0; k < rows[i].size(); ++k) {
                    double vi = rows[i][k], vj = rows[j][k];
                    rows[i][k] = cs * vi - sn * vj;
                    rows[j][k] = sn * vi + cs * vj;
                }
                norm2[i] = dot(rows[i], rows[i]);
                norm2[j] = dot(rows[j], rows[j]);
            }
        if (!rotated) break;
    }
    std::vector<double> sv(m);
    for (size_t i = 0; i < m; ++i) sv[i] = std::sqrt(norm2[i]);
    return sv;
}

}  // namespace detail

// Real rank of the multipole images of orders 0..2s, via the singular values
// of the stacked (re, im) coordinate vectors; threshold 1e-9 relative to the
// largest singular value.
inline int multipole_span_rank(HalfInt s) {
    SpinRep rep = spin_matrices(s);
    const int d = rep.dim();
    std::vector<std::vector<double>> vectors;
    for (int k = 0; k <= s.twice(); ++k)
        for (const auto& w : all_words(3, k)) {
            CMat m = multipole_matrix(k, w, rep);
            std::vector<double> v;
            v.reserve(2 * d * d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    v.push_back(m(i, j).real());
                    v.push_back(m(i, j).imag());
                }
            vectors.push_back(std::move(v));
        }
    auto sv = detail::singular_values(std::move(vectors));
    double maxsv = 0;
    for (double x : sv) maxsv = std::max(maxsv, x);
    if (maxsv == 0) return 0;
    int rank = 0;
    for (double x : sv)
        if (x > 1e-9 * maxsv) ++rank;
    return rank;
}

}  // namespace spinclif
