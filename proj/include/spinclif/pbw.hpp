#pragma once

// U(so(3)) with ordered monomial (PBW) normal forms. Generators J1, J2, J3
// obey [Ja, Jb] = sum_c eps_abc Jc; the fixed monomial order is J1 <= J2 <= J3.
// Free-algebra inputs live in Element<..> over a 3-dimensional letter space
// where letter p stands for Jp.

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "spinclif/element.hpp"

namespace spinclif {

// Levi-Civita symbol on {1,2,3}; 0 on repeated indices.
inline int epsilon(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    // parity of (a,b,c) as a permutation of (1,2,3)
    int inversions = (a > b) + (a > c) + (b > c);
    return inversions % 2 == 0 ? 1 : -1;
}

struct PBWMonomial {
    std::array<uint16_t, 3> e{0, 0, 0};  // exponents of J1, J2, J3

    int degree() const { return e[0] + e[1] + e[2]; }

    Word word() const {
        std::vector<uint8_t> idx;
        idx.reserve(degree());
        for (int g = 0; g < 3; ++g)
            for (int r = 0; r < e[g]; ++r) idx.push_back(static_cast<uint8_t>(g + 1));
        return Word(std::move(idx));
    }

    // degree first; within a degree, ordered-word lexicographic (J1-heavy
    // monomials first), which is the reverse of exponent-array order
    friend bool operator<(const PBWMonomial& x, const PBWMonomial& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.e > y.e;
    }
    friend bool operator==(const PBWMonomial& x, const PBWMonomial& y) { return x.e == y.e; }

    std::string str() const {
        if (degree() == 0) return "1";
        return word().str("J");
    }
};

class PBWElement {
public:
    using Terms = std::map<PBWMonomial, Rational>;

    PBWElement() = default;

    static PBWElement zero() { return {}; }
    static PBWElement one() { return scalar(Rational(1)); }
    static PBWElement scalar(const Rational& c) {
        PBWElement r;
        r.add_term(PBWMonomial{}, c);
        return r;
    }
    static PBWElement generator(int a) {
        PBWMonomial m;
        m.e[a - 1] = 1;
        PBWElement r;
        r.add_term(m, Rational(1));
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    Rational coefficient(const PBWMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const PBWMonomial& m, const Rational& c) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    PBWElement operator-() const {
        PBWElement r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    PBWElement& operator+=(const PBWElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PBWElement& operator-=(const PBWElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }

    friend PBWElement operator*(const Rational& s, const PBWElement& x) {
        PBWElement r;
        for (const auto& [m, c] : x.terms_) r.add_term(m, s * c);
        return r;
    }
    friend PBWElement operator*(const PBWElement& x, const Rational& s) { return s * x; }

    friend bool operator==(const PBWElement& a, const PBWElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    // free-algebra image over the J letter space (each monomial as its sorted word)
    ElementQ as_free() const {
        ElementQ r(3);
        for (const auto& [m, c] : terms_) r.add_term(m.word(), c);
        return r;
    }

    // canonical text form, descending degree: "J1.J2 - J3"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        auto block_end = terms_.end();
        while (block_end != terms_.begin()) {
            auto it = block_end;
            --it;
            int deg = it->first.degree();
            auto block_begin = block_end;
            while (block_begin != terms_.begin()) {
                auto prev = block_begin;
                --prev;
                if (prev->first.degree() != deg) break;
                block_begin = prev;
            }
            for (auto t = block_begin; t != block_end; ++t) {
                const Rational& c = t->second;
                Rational mag = c.abs();
                if (first)
                    out += (c.sign() < 0) ? "-" : "";
                else
                    out += (c.sign() < 0) ? " - " : " + ";
                first = false;
                if (t->first.degree() == 0)
                    out += mag.str();
                else if (mag.is_one())
                    out += t->first.str();
                else
                    out += mag.str() + "*" + t->first.str();
            }
            block_end = block_begin;
        }
        return out;
    }

private:
    Terms terms_;
};

// Chooses which descent of a word to rewrite next; index is into the list of
// descent positions. The default picks the first, giving the canonical run;
// tests may randomize it to probe confluence.
using DescentChooser = std::function<size_t(size_t descent_count)>;

inline PBWElement pbw_normal_form(const ElementQ& x, const DescentChooser& choose = {}) {
    if (x.dim() != 3) throw std::invalid_argument("pbw_normal_form: expected an element over the 3 generators");
    PBWElement out;
    std::map<Word, Rational> pending(x.terms().begin(), x.terms().end());
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        Rational c = it->second;
        pending.erase(it);
        if (c.is_zero()) continue;
        std::vector<size_t> descents;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) descents.push_back(i);
        if (descents.empty()) {
            PBWMonomial m;
            for (size_t i = 0; i < w.size(); ++i) ++m.e[w[i] - 1];
            out.add_term(m, c);
            continue;
        }
        size_t pos = descents[choose ? choose(descents.size()) % descents.size() : 0];
        int xg = w[pos], yg = w[pos + 1];  // xg > yg
        // Jx Jy = Jy Jx - sum_c eps(y, x, c) Jc
        std::vector<uint8_t> swapped(w.indices());
        std::swap(swapped[pos], swapped[pos + 1]);
        auto bump = [&](const Word& word, const Rational& coeff) {
            auto [jt, inserted] = pending.emplace(word, coeff);
            if (!inserted) {
                jt->second += coeff;
                if (jt->second.is_zero()) pending.erase(jt);
            }
        };
        bump(Word(std::move(swapped)), c);
        for (int z = 1; z <= 3; ++z) {
            int eps = epsilon(yg, xg, z);
            if (eps == 0) continue;
            std::vector<uint8_t> shorter;
            shorter.reserve(w.size() - 1);
            for (size_t i = 0; i < w.size(); ++i) {
                if (i == pos) shorter.push_back(static_cast<uint8_t>(z));
                else if (i != pos + 1) shorter.push_back(w[i]);
            }
            bump(Word(std::move(shorter)), -Rational(eps) * c);
        }
    }
    return out;
}

// Product in U(so(3)): concatenate monomial words, then straighten.
inline PBWElement operator*(const PBWElement& a, const PBWElement& b) {
    ElementQ prod = a.as_free() * b.as_free();
    return pbw_normal_form(prod);
}

// L_A(B) = A (x) B followed by normal form.
inline PBWElement left_mult(const PBWElement& a, const PBWElement& b) { return a * b; }

inline PBWElement casimir() {
    PBWElement c;
    for (int a = 1; a <= 3; ++a) c += PBWElement::generator(a) * PBWElement::generator(a);
    return c;
}

inline ElementQ casimir_free() {
    ElementQ c(3);
    for (int a = 1; a <= 3; ++a) c.add_term(Word{a, a}, Rational(1));
    return c;
}

// The adjoint action ad(u) for u in the tensor algebra over the generators:
// scalars multiply, degree-1 letters commutate, words compose letterwise.
inline PBWElement ad(const ElementQ& u, const PBWElement& v) {
    if (u.dim() != 3) throw std::invalid_argument("ad: expected an element over the 3 generators");
    PBWElement acc;
    for (const auto& [w, c] : u.terms()) {
        PBWElement t = v;
        for (size_t i = w.size(); i-- > 0;) {
            PBWElement j = PBWElement::generator(w[i]);
            t = j * t - t * j;
        }
        acc += c * t;
    }
    return acc;
}

inline PBWElement ad(const Rational& scalar, const PBWElement& v) { return scalar * v; }
inline PBWElement ad(const PBWElement& u, const PBWElement& v) { return ad(u.as_free(), v); }

inline PBWElement ad_casimir(const PBWElement& v) { return ad(casimir_free(), v); }

// Multipole recursion. For a word a_1..a_k over {1,2,3}:
//   mu_0() = 1,  mu_1(a) = Ja,
//   mu_{m+1}(v (x) B) = [ad(C + m(m-1)) o ad(C + m(m+1))] / (4(m+1)(2m+1)) (L_v mu_m(B)).
inline PBWElement multipole(int k, const std::vector<int>& word) {
    if (k < 0 || static_cast<int>(word.size()) != k)
        throw std::invalid_argument("multipole: word length must equal k");
    for (int a : word)
        if (a < 1 || a > 3) throw std::invalid_argument("multipole: word entries must be in 1..3");
    if (k == 0) return PBWElement::one();
    PBWElement acc = PBWElement::generator(word[k - 1]);
    for (int i = k - 2; i >= 0; --i) {
        int m = k - 1 - i;  // degree of acc
        PBWElement x = PBWElement::generator(word[i]) * acc;
        PBWElement y = ad_casimir(x) + Rational(m * (m + 1)) * x;
        PBWElement z = ad_casimir(y) + Rational(m * (m - 1)) * y;
        acc = Rational(1, 4 * (m + 1) * (2 * m + 1)) * z;
    }
    return acc;
}

}  // namespace spinclif
