#pragma once

// Univariate polynomials over Q. The main use is values in Q[C], where C is
// the formal Casimir symbol; the same type carries minimal polynomials.

#include <string>
#include <vector>

#include "spinclif/rational.hpp"

namespace spinclif {

class CasimirPoly {
public:
    CasimirPoly() = default;
    CasimirPoly(const Rational& c) {
        if (!c.is_zero()) coef_.push_back(c);
    }
    CasimirPoly(long c) : CasimirPoly(Rational(c)) {}

    static CasimirPoly symbol() { return monomial(1, 1); }

    static CasimirPoly monomial(int power, const Rational& c) {
        CasimirPoly p;
        if (!c.is_zero()) {
            p.coef_.assign(power + 1, Rational(0));
            p.coef_[power] = c;
        }
        return p;
    }

    static CasimirPoly from_coefficients(std::vector<Rational> c) {
        CasimirPoly p;
        p.coef_ = std::move(c);
        p.trim();
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coef_.size()) - 1; }

    Rational coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(coef_.size())) return Rational(0);
        return coef_[k];
    }
    Rational leading() const { return coef_.empty() ? Rational(0) : coef_.back(); }
    Rational constant_term() const { return coefficient(0); }

    CasimirPoly operator-() const {
        CasimirPoly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    CasimirPoly& operator+=(const CasimirPoly& o) {
        if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
        for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
        trim();
        return *this;
    }
    CasimirPoly& operator-=(const CasimirPoly& o) { return *this += -o; }

    friend CasimirPoly operator+(CasimirPoly a, const CasimirPoly& b) { return a += b; }
    friend CasimirPoly operator-(CasimirPoly a, const CasimirPoly& b) { return a -= b; }

    friend CasimirPoly operator*(const CasimirPoly& a, const CasimirPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        CasimirPoly r;
        r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coef_.size(); ++i)
            for (size_t j = 0; j < b.coef_.size(); ++j)
                r.coef_[i + j] += a.coef_[i] * b.coef_[j];
        r.trim();
        return r;
    }
    CasimirPoly& operator*=(const CasimirPoly& o) { return *this = *this * o; }

    friend CasimirPoly operator*(const CasimirPoly& a, const Rational& s) {
        return a * CasimirPoly(s);
    }
    friend CasimirPoly operator*(const Rational& s, const CasimirPoly& a) {
        return a * CasimirPoly(s);
    }
    CasimirPoly operator/(const Rational& s) const { return *this * s.reciprocal(); }

    friend bool operator==(const CasimirPoly& a, const CasimirPoly& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const CasimirPoly& a, const CasimirPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
        return acc;
    }

    // Euclidean division by a nonzero polynomial; returns (quotient, remainder).
    std::pair<CasimirPoly, CasimirPoly> divmod(const CasimirPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        CasimirPoly q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational c = r.leading() / d.leading();
            q += monomial(k, c);
            r -= monomial(k, c) * d;
        }
        return {q, r};
    }

    CasimirPoly monic() const {
        if (is_zero()) return {};
        return *this / leading();
    }

    static CasimirPoly gcd(CasimirPoly a, CasimirPoly b) {
        while (!b.is_zero()) {
            CasimirPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    static CasimirPoly lcm(const CasimirPoly& a, const CasimirPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        CasimirPoly g = gcd(a, b);
        return (a * b).divmod(g).first.monic();
    }

    // Canonical ascending form, e.g. "-3/4 + 1/2*C + C^2".
    std::string str(const std::string& var = "C") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (size_t k = 0; k < coef_.size(); ++k) {
            const Rational& c = coef_[k];
            if (c.is_zero()) continue;
            Rational mag = c.abs();
            if (first) {
                out += (c.sign() < 0) ? "-" : "";
                first = false;
            } else {
                out += (c.sign() < 0) ? " - " : " + ";
            }
            std::string coeff = mag.str();
            if (k == 0) {
                out += coeff;
            } else {
                if (!mag.is_one()) out += coeff + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
    }

    std::vector<Rational> coef_;  // ascending powers; invariant: back() != 0
};

// Evaluation at C = -s(s+1), the value the Casimir takes at spin s.
inline Rational substitute_casimir(const CasimirPoly& p, const HalfInt& s) {
    return p.eval(-s.s_times_s_plus_one());
}

}  // namespace spinclif
