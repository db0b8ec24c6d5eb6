#pragma once

// The free tensor algebra T(V) over an n-dimensional space: words are finite
// index sequences over {1..n} (the empty word is the unit), elements are
// finite linear combinations of words. Truncation is not this layer's job;
// quotients own any degree bound.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinclif/poly.hpp"
#include "spinclif/rational.hpp"

namespace spinclif {

class Word {
public:
    Word() = default;
    explicit Word(std::vector<uint8_t> idx) : idx_(std::move(idx)) {}
    Word(std::initializer_list<int> idx) {
        idx_.reserve(idx.size());
        for (int i : idx) idx_.push_back(static_cast<uint8_t>(i));
    }

    size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    int operator[](size_t i) const { return idx_[i]; }

    Word concat(const Word& o) const {
        std::vector<uint8_t> v = idx_;
        v.insert(v.end(), o.idx_.begin(), o.idx_.end());
        return Word(std::move(v));
    }

    Word prepend(int letter) const {
        std::vector<uint8_t> v;
        v.reserve(idx_.size() + 1);
        v.push_back(static_cast<uint8_t>(letter));
        v.insert(v.end(), idx_.begin(), idx_.end());
        return Word(std::move(v));
    }

    Word append(int letter) const {
        std::vector<uint8_t> v = idx_;
        v.push_back(static_cast<uint8_t>(letter));
        return Word(std::move(v));
    }

    Word without_slots(size_t a, size_t b) const {  // 0-based, a < b
        std::vector<uint8_t> v;
        v.reserve(idx_.size() - 2);
        for (size_t i = 0; i < idx_.size(); ++i)
            if (i != a && i != b) v.push_back(idx_[i]);
        return Word(std::move(v));
    }

    // graded order: by length first, then lexicographic
    friend bool operator<(const Word& x, const Word& y) {
        if (x.idx_.size() != y.idx_.size()) return x.idx_.size() < y.idx_.size();
        return x.idx_ < y.idx_;
    }
    friend bool operator==(const Word& x, const Word& y) { return x.idx_ == y.idx_; }
    friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }

    std::string str(const std::string& letter = "e") const {
        if (idx_.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < idx_.size(); ++i) {
            if (i) s += ".";
            s += letter + std::to_string(idx_[i]);
        }
        return s;
    }

    const std::vector<uint8_t>& indices() const { return idx_; }

private:
    std::vector<uint8_t> idx_;
};

// Number of words over {1..n} of degree <= d.
inline uint64_t word_count_up_to(int n, int d) {
    uint64_t total = 0, pw = 1;
    for (int k = 0; k <= d; ++k) {
        total += pw;
        pw *= n;
    }
    return total;
}

inline uint64_t word_id_offset(int n, int len) { return word_count_up_to(n, len - 1); }

// Dense id respecting the graded order: ids of degree-d words precede all
// ids of degree d+1, and agree with lexicographic order within a degree.
inline uint64_t word_id(const Word& w, int n) {
    uint64_t rank = 0;
    for (size_t i = 0; i < w.size(); ++i) rank = rank * n + (w[i] - 1);
    return word_id_offset(n, static_cast<int>(w.size())) + rank;
}

inline Word word_from_id(uint64_t id, int n) {
    int len = 0;
    while (word_count_up_to(n, len) <= id) ++len;
    uint64_t rank = id - word_id_offset(n, len);
    std::vector<uint8_t> idx(len);
    for (int i = len - 1; i >= 0; --i) {
        idx[i] = static_cast<uint8_t>(rank % n + 1);
        rank /= n;
    }
    return Word(std::move(idx));
}

inline int word_degree_of_id(uint64_t id, int n) {
    int len = 0;
    while (word_count_up_to(n, len) <= id) ++len;
    return len;
}

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const CasimirPoly& c) { return c.is_zero(); }

}  // namespace detail

template <class Coeff = Rational>
class Element {
public:
    using Terms = std::map<Word, Coeff>;

    explicit Element(int dim) : dim_(dim) {}

    static Element zero(int dim) { return Element(dim); }
    static Element unit(int dim) { return term(Word{}, Coeff(1), dim); }
    static Element scalar(const Coeff& c, int dim) { return term(Word{}, c, dim); }
    static Element basis_vector(int i, int dim) { return term(Word{i}, Coeff(1), dim); }

    static Element term(const Word& w, const Coeff& c, int dim) {
        Element e(dim);
        e.add_term(w, c);
        return e;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // max word length in the support; 0 for the zero element
    int degree() const { return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size()); }

    bool is_homogeneous(int k) const {
        for (const auto& [w, c] : terms_)
            if (static_cast<int>(w.size()) != k) return false;
        return true;
    }

    Coeff coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(const Word& w, const Coeff& c) {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] < 1 || w[i] > dim_) throw std::invalid_argument("word index out of range");
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        } else if (detail::coeff_is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    Element operator-() const {
        Element r(dim_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    Element& operator+=(const Element& o) {
        check_dim(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        check_dim(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    friend Element operator*(const Coeff& s, const Element& x) {
        Element r(x.dim_);
        for (const auto& [w, c] : x.terms_) r.add_term(w, s * c);
        return r;
    }
    friend Element operator*(const Element& x, const Coeff& s) { return s * x; }

    // tensor-product concatenation, extended bilinearly
    friend Element operator*(const Element& x, const Element& y) {
        x.check_dim(y);
        Element r(x.dim_);
        for (const auto& [wx, cx] : x.terms_)
            for (const auto& [wy, cy] : y.terms_) r.add_term(wx.concat(wy), cx * cy);
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // Canonical text form: terms listed by descending degree, lexicographic
    // within a degree, e.g. "1/2*e1.e2 - 1/2*e2.e1".
    std::string str(const std::string& letter = "e") const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        // walk degree blocks from the highest down, in storage (lex) order inside
        auto block_end = terms_.end();
        while (block_end != terms_.begin()) {
            auto it = block_end;
            --it;
            size_t deg = it->first.size();
            auto block_begin = block_end;
            while (block_begin != terms_.begin()) {
                auto prev = block_begin;
                --prev;
                if (prev->first.size() != deg) break;
                block_begin = prev;
            }
            for (auto t = block_begin; t != block_end; ++t) {
                append_term(out, first, t->first, t->second, letter);
                first = false;
            }
            block_end = block_begin;
        }
        return out;
    }

private:
    void check_dim(const Element& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("element dimension mismatch");
    }

    static void append_term(std::string& out, bool first, const Word& w, const Rational& c,
                            const std::string& letter) {
        Rational mag = c.abs();
        if (first)
            out += (c.sign() < 0) ? "-" : "";
        else
            out += (c.sign() < 0) ? " - " : " + ";
        if (w.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += w.str(letter);
        } else {
            out += mag.str() + "*" + w.str(letter);
        }
    }

    static void append_term(std::string& out, bool first, const Word& w, const CasimirPoly& c,
                            const std::string& letter) {
        if (c.is_constant()) {
            append_term(out, first, w, c.constant_term(), letter);
            return;
        }
        if (!first) out += " + ";
        if (w.empty()) {
            out += "(" + c.str() + ")";
        } else {
            out += "(" + c.str() + ")*" + w.str(letter);
        }
    }

    int dim_;
    Terms terms_;
};

using ElementQ = Element<Rational>;
using ElementC = Element<CasimirPoly>;

inline ElementC promote(const ElementQ& x) {
    ElementC r(x.dim());
    for (const auto& [w, c] : x.terms()) r.add_term(w, CasimirPoly(c));
    return r;
}

// The tensor product as a named operation.
template <class Coeff>
Element<Coeff> concat(const Element<Coeff>& x, const Element<Coeff>& y) {
    return x * y;
}

}  // namespace spinclif
