#pragma once

// Slot operations on homogeneous tensors: permutation, symmetrizer,
// antisymmetrizer, wedge products and metric contractions.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spinclif/element.hpp"
#include "spinclif/metric.hpp"

namespace spinclif {

using Permutation = std::vector<int>;  // images of slots 0..k-1

inline int permutation_sign(Permutation p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    return sign;
}

inline std::vector<Permutation> all_permutations(int k) {
    Permutation base(k);
    std::iota(base.begin(), base.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

template <class Coeff>
void require_homogeneous(const Element<Coeff>& x, int k, const char* what) {
    if (!x.is_homogeneous(k)) throw std::invalid_argument(std::string(what) + ": input not homogeneous of the stated degree");
}

// Slot permutation: slot i of the result holds slot tau[i] of the input.
template <class Coeff>
Element<Coeff> apply_permutation(const Element<Coeff>& x, const Permutation& tau) {
    const int k = static_cast<int>(tau.size());
    require_homogeneous(x, k, "apply_permutation");
    Element<Coeff> r(x.dim());
    for (const auto& [w, c] : x.terms()) {
        std::vector<uint8_t> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = static_cast<uint8_t>(w[tau[i]]);
        r.add_term(Word(std::move(idx)), c);
    }
    return r;
}

template <class Coeff>
Element<Coeff> symmetrize(const Element<Coeff>& x, int k) {
    require_homogeneous(x, k, "symmetrize");
    if (k <= 1) return x;
    Element<Coeff> acc(x.dim());
    for (const auto& tau : all_permutations(k)) acc += apply_permutation(x, tau);
    Rational factor(1);
    for (int i = 2; i <= k; ++i) factor *= Rational(1, i);
    return acc * Coeff(factor);
}

template <class Coeff>
Element<Coeff> antisymmetrize(const Element<Coeff>& x, int k) {
    require_homogeneous(x, k, "antisymmetrize");
    if (k <= 1) return x;
    Element<Coeff> acc(x.dim());
    for (const auto& tau : all_permutations(k)) {
        auto piece = apply_permutation(x, tau);
        if (permutation_sign(tau) < 0) piece = -piece;
        acc += piece;
    }
    Rational factor(1);
    for (int i = 2; i <= k; ++i) factor *= Rational(1, i);
    return acc * Coeff(factor);
}

// (1/k!) sum_sigma sgn(sigma) v_sigma(1) x ... x v_sigma(k).
// Arguments must have degree <= 1; scalar parts multiply out as 0-blades.
template <class Coeff>
Element<Coeff> wedge(const std::vector<Element<Coeff>>& vs) {
    if (vs.empty()) throw std::invalid_argument("wedge: empty argument list");
    const int dim = vs.front().dim();
    for (const auto& v : vs) {
        if (v.dim() != dim) throw std::invalid_argument("wedge: element dimension mismatch");
        if (v.degree() > 1) throw std::invalid_argument("wedge: arguments must have degree <= 1");
    }
    // peel off scalar components so the alternating sum only sees vectors
    for (size_t i = 0; i < vs.size(); ++i) {
        Coeff s = vs[i].coefficient(Word{});
        if (detail::coeff_is_zero(s)) continue;
        std::vector<Element<Coeff>> rest;
        rest.reserve(vs.size() - 1);
        for (size_t j = 0; j < vs.size(); ++j)
            if (j != i) rest.push_back(vs[j]);
        Element<Coeff> vec_part = vs[i] - Element<Coeff>::scalar(s, dim);
        Element<Coeff> out = rest.empty() ? Element<Coeff>::scalar(s, dim) : wedge(rest) * s;
        if (!vec_part.is_zero()) {
            auto with_vec = vs;
            with_vec[i] = vec_part;
            out += wedge(with_vec);
        }
        return out;
    }
    const int k = static_cast<int>(vs.size());
    Element<Coeff> acc(dim);
    for (const auto& tau : all_permutations(k)) {
        Element<Coeff> prod = vs[tau[0]];
        for (int i = 1; i < k; ++i) prod = prod * vs[tau[i]];
        acc += permutation_sign(tau) < 0 ? -prod : prod;
    }
    Rational factor(1);
    for (int i = 2; i <= k; ++i) factor *= Rational(1, i);
    return acc * Coeff(factor);
}

template <class Coeff>
Element<Coeff> wedge(const Element<Coeff>& a, const Element<Coeff>& b) {
    return wedge(std::vector<Element<Coeff>>{a, b});
}

template <class Coeff>
Element<Coeff> wedge(const Element<Coeff>& a, const Element<Coeff>& b, const Element<Coeff>& c) {
    return wedge(std::vector<Element<Coeff>>{a, b, c});
}

// Metric trace over slots m < n (1-based); degree drops by two.
template <class Coeff>
Element<Coeff> contract(const Element<Coeff>& x, int m, int n, const MetricSpace& space) {
    const int k = x.degree();
    require_homogeneous(x, k, "contract");
    if (k < 2) throw std::invalid_argument("contract: need degree >= 2");
    if (m < 1 || n < 1 || m >= n || n > k) throw std::invalid_argument("contract: slot out of range");
    Element<Coeff> r(x.dim());
    for (const auto& [w, c] : x.terms()) {
        const Rational& g = space.g(w[m - 1], w[n - 1]);
        if (g.is_zero()) continue;
        r.add_term(w.without_slots(m - 1, n - 1), c * Coeff(g));
    }
    return r;
}

}  // namespace spinclif
