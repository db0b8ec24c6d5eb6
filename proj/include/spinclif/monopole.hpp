#pragma once

// Monopole-part extraction in U(so(3)): the component of an element along
// the identity, over Q[C]. Works through the minimal polynomial of ad_C on
// the ad-stable subspace generated by the input.

#include <functional>
#include <map>
#include <vector>

#include "spinclif/pbw.hpp"
#include "spinclif/poly.hpp"
#include "spinclif/ratmat.hpp"

namespace spinclif {

using UEAOperator = std::function<PBWElement(const PBWElement&)>;

namespace detail {

// Rational row echelon keyed by PBW monomials; tracks an independent subset.
class PBWSpan {
public:
    // Returns true (and stores a reduced echelon row) when x is independent
    // of everything inserted so far.
    bool insert(const PBWElement& x) {
        PBWElement r = reduce(x);
        if (r.is_zero()) return false;
        Rational lead = r.terms().rbegin()->second;
        rows_.push_back(lead.reciprocal() * r);
        return true;
    }

    bool contains(const PBWElement& x) const { return reduce(x).is_zero(); }

    size_t dim() const { return rows_.size(); }

private:
    PBWElement reduce(PBWElement x) const {
        // rows are not interreduced, so eliminating one lead can reintroduce
        // another; iterate to a fixpoint (tails are below their leads, so
        // this terminates)
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& row : rows_) {
                const PBWMonomial& lead = row.terms().rbegin()->first;
                Rational c = x.coefficient(lead);
                if (!c.is_zero()) {
                    x -= c * row;
                    changed = true;
                }
            }
        }
        return x;
    }

    std::vector<PBWElement> rows_;
};

inline std::vector<PBWMonomial> collect_monomials(const std::vector<PBWElement>& xs) {
    std::map<PBWMonomial, int> seen;
    for (const auto& x : xs)
        for (const auto& [m, c] : x.terms()) seen.emplace(m, 0);
    std::vector<PBWMonomial> out;
    out.reserve(seen.size());
    for (auto& [m, idx] : seen) out.push_back(m);
    return out;
}

inline RatVec coordinates(const PBWElement& x, const std::vector<PBWMonomial>& monomials,
                          bool* in_span = nullptr) {
    std::map<PBWMonomial, size_t> index;
    for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
    RatVec v(monomials.size(), Rational(0));
    bool ok = true;
    for (const auto& [m, c] : x.terms()) {
        auto it = index.find(m);
        if (it == index.end()) {
            ok = false;
            continue;
        }
        v[it->second] = c;
    }
    if (in_span) *in_span = ok;
    else if (!ok) throw std::logic_error("element leaves the monomial support");
    return v;
}

// Minimal polynomial of a square rational matrix via Krylov chains.
inline CasimirPoly matrix_minimal_polynomial(const RatMat& m) {
    const int k = m.rows();
    CasimirPoly result = CasimirPoly(Rational(1));
    for (int i = 0; i < k; ++i) {
        // Krylov sequence from the i-th unit vector
        std::vector<RatVec> chain;
        RatVec v(k, Rational(0));
        v[i] = Rational(1);
        while (true) {
            // is v in span(chain)?
            RatMat a(k, static_cast<int>(chain.size()));
            for (int r = 0; r < k; ++r)
                for (size_t c = 0; c < chain.size(); ++c) a(r, static_cast<int>(c)) = chain[c][r];
            auto sol = solve_linear(a, v);
            if (sol) {
                // v = sum sol_j chain_j  =>  x^len - sum sol_j x^j annihilates e_i
                std::vector<Rational> coef(chain.size() + 1, Rational(0));
                for (size_t j = 0; j < chain.size(); ++j) coef[j] = -(*sol)[j];
                coef[chain.size()] = Rational(1);
                result = CasimirPoly::lcm(result, CasimirPoly::from_coefficients(coef));
                break;
            }
            chain.push_back(v);
            v = m.apply(v);
        }
        if (result.degree() >= k) break;
    }
    return result.monic();
}

}  // namespace detail

// Monic least-degree annihilating polynomial of op restricted to span(space).
// Throws std::invalid_argument when the span is not op-stable.
inline CasimirPoly minimal_polynomial(const UEAOperator& op, const std::vector<PBWElement>& space) {
    // extract an independent spanning subset
    detail::PBWSpan span;
    std::vector<PBWElement> basis;
    for (const auto& x : space)
        if (span.insert(x)) basis.push_back(x);
    if (basis.empty()) return CasimirPoly(Rational(1));  // zero space: annihilated by 1

    std::vector<PBWElement> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(op(b));

    std::vector<PBWElement> everything = basis;
    everything.insert(everything.end(), images.begin(), images.end());
    auto monomials = detail::collect_monomials(everything);

    const int k = static_cast<int>(basis.size());
    RatMat b(static_cast<int>(monomials.size()), k);
    for (int j = 0; j < k; ++j) {
        RatVec col = detail::coordinates(basis[j], monomials);
        for (size_t r = 0; r < monomials.size(); ++r) b(static_cast<int>(r), j) = col[r];
    }
    RatMat m(k, k);
    for (int j = 0; j < k; ++j) {
        auto sol = solve_linear(b, detail::coordinates(images[j], monomials));
        if (!sol) throw std::invalid_argument("minimal_polynomial: space is not op-stable");
        for (int r = 0; r < k; ++r) m(r, j) = (*sol)[r];
    }
    return detail::matrix_minimal_polynomial(m);
}

// Mon(A): with m(x) the minimal polynomial of ad_C on the ad-stable subspace
// generated by A, returns n(ad_C)(A)/n(0) when m(x) = x n(x), else 0.
// Throws std::runtime_error when closure escapes the degree bound.
inline CasimirPoly monopole_part(const PBWElement& a, int working_degree = -1) {
    if (a.is_zero()) return CasimirPoly();
    if (working_degree < 0) working_degree = a.degree();
    if (working_degree < a.degree())
        throw std::invalid_argument("monopole_part: working degree below the element degree");

    detail::PBWSpan span;
    std::vector<PBWElement> basis;
    span.insert(a);
    basis.push_back(a);
    for (size_t head = 0; head < basis.size(); ++head) {
        PBWElement current = basis[head];  // copy: basis may reallocate
        for (int g = 1; g <= 3; ++g) {
            PBWElement j = PBWElement::generator(g);
            PBWElement img = j * current - current * j;
            if (img.degree() > working_degree)
                throw std::runtime_error("monopole_part: ad-closure exceeded the working degree");
            if (span.insert(img)) basis.push_back(img);
        }
    }

    CasimirPoly m = minimal_polynomial([](const PBWElement& x) { return ad_casimir(x); }, basis);
    if (!m.constant_term().is_zero()) return CasimirPoly();  // no x factor: no monopole component

    CasimirPoly n = m.divmod(CasimirPoly::symbol()).first;
    if (n.constant_term().is_zero())
        throw std::logic_error("monopole_part: ad_C not semisimple on the closure");

    PBWElement z;
    PBWElement power = a;
    for (int j = 0; j <= n.degree(); ++j) {
        z += n.coefficient(j) * power;
        if (j < n.degree()) power = ad_casimir(power);
    }
    z = n.constant_term().reciprocal() * z;

    // z must be a polynomial in the Casimir element; solve for its coefficients
    int max_power = z.degree() / 2;
    std::vector<PBWElement> powers{PBWElement::one()};
    for (int j = 1; j <= max_power; ++j) powers.push_back(powers.back() * casimir());

    std::vector<PBWElement> everything = powers;
    everything.push_back(z);
    auto monomials = detail::collect_monomials(everything);
    RatMat mat(static_cast<int>(monomials.size()), max_power + 1);
    for (int j = 0; j <= max_power; ++j) {
        RatVec col = detail::coordinates(powers[j], monomials);
        for (size_t r = 0; r < monomials.size(); ++r) mat(static_cast<int>(r), j) = col[r];
    }
    auto sol = solve_linear(mat, detail::coordinates(z, monomials));
    if (!sol) throw std::logic_error("monopole_part: result is not a polynomial in the Casimir element");
    return CasimirPoly::from_coefficients(*sol);
}

}  // namespace spinclif
