#pragma once

// Exact sparse row echelon over the rationals, kept in fraction-free form:
// each stored row has integer entries with content 1 and a positive leading
// coefficient. Rows are sparse vectors over word ids, ascending; the leading
// term is the largest id. Pivot selection is therefore "greatest word wins",
// which makes canonical representatives prefer low, ordered words.
//
// Rows are inserted with full reduction against existing pivots. Tails of
// stored rows may refer to pivots discovered later; reduce() iterates from
// the top id downward, so such stale references resolve on the fly. A final
// interreduce() pass rewrites tails onto non-pivot ids only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "spinclif/element.hpp"

namespace spinclif {

class RowSpace {
public:
    using Row = std::vector<std::pair<uint64_t, BigInt>>;  // ascending ids

    bool has_pivot(uint64_t id) const { return pivot_.find(id) != pivot_.end(); }
    size_t size() const { return rows_.size(); }

    const Row& row_for_pivot(uint64_t id) const { return rows_[pivot_.at(id)]; }

    std::vector<uint64_t> pivot_ids() const {
        std::vector<uint64_t> ids;
        ids.reserve(rows_.size());
        for (const auto& r : rows_) ids.push_back(r.back().first);
        return ids;
    }

    // Fully reduces r against the pivots; inserts it as a new pivot row when
    // nonzero. Returns the pivot id, or nullopt when r reduced to zero.
    std::optional<uint64_t> insert(const Row& r) {
        std::map<uint64_t, BigInt> m(r.begin(), r.end());
        reduce_integer(m);
        if (m.empty()) return std::nullopt;
        Row out(m.begin(), m.end());
        normalize(out);
        uint64_t lead = out.back().first;
        pivot_.emplace(lead, rows_.size());
        rows_.push_back(std::move(out));
        return lead;
    }

    // Canonical linear reduction of a coefficient row (Rational or Q[C]).
    template <class Coeff>
    std::map<uint64_t, Coeff> reduce(std::map<uint64_t, Coeff> m) const {
        auto it = m.end();
        while (it != m.begin()) {
            --it;
            auto p = pivot_.find(it->first);
            if (p == pivot_.end()) continue;
            const Row& prow = rows_[p->second];
            const uint64_t w = it->first;
            Coeff factor = it->second * Rational(BigInt(1), prow.back().second);
            for (const auto& [id, v] : prow) {
                auto [jt, inserted] = m.try_emplace(id, Coeff(0));
                jt->second -= factor * Coeff(Rational(v));
                if (detail::coeff_is_zero(jt->second)) m.erase(jt);
            }
            it = m.lower_bound(w);  // resume just above the erased id
        }
        return m;
    }

    // Rewrites every stored row with lead id <= max_lead so that its tail
    // holds no pivot ids; reduce() then resolves in a single pass.
    void interreduce(uint64_t max_lead) {
        std::vector<size_t> order;
        for (size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].back().first <= max_lead) order.push_back(i);
        // ascending lead order so each tail only meets already-clean pivots
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return rows_[a].back().first < rows_[b].back().first;
        });
        for (size_t idx : order) {
            Row& row = rows_[idx];
            if (row.size() <= 1) continue;
            std::map<uint64_t, Rational> tail;
            for (size_t i = 0; i + 1 < row.size(); ++i)
                tail.emplace(row[i].first, Rational(row[i].second));
            tail = reduce(tail);
            BigInt den(1);
            for (const auto& [id, c] : tail) den = big_lcm(den, c.den());
            Row out;
            out.reserve(tail.size() + 1);
            for (const auto& [id, c] : tail) out.emplace_back(id, c.num() * (den / c.den()));
            out.emplace_back(row.back().first, row.back().second * den);
            normalize(out);
            row = std::move(out);
        }
    }

private:
    static void normalize(Row& r) {
        BigInt g(0);
        for (const auto& [id, v] : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (r.back().second < 0) g = -g;
        if (g != 0 && g != 1)
            for (auto& [id, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }

    void reduce_integer(std::map<uint64_t, BigInt>& m) const {
        int since_strip = 0;
        auto it = m.end();
        while (it != m.begin()) {
            --it;
            auto p = pivot_.find(it->first);
            if (p == pivot_.end()) continue;
            const Row& prow = rows_[p->second];
            const uint64_t w = it->first;
            const BigInt c = it->second;
            const BigInt& plead = prow.back().second;
            if (plead != 1)
                for (auto& [id, v] : m) v *= plead;
            for (const auto& [id, v] : prow) {
                auto [jt, inserted] = m.try_emplace(id, BigInt(0));
                jt->second -= c * v;
                if (jt->second == 0) m.erase(jt);
            }
            if (++since_strip >= 8) {
                strip_content(m);
                since_strip = 0;
            }
            it = m.lower_bound(w);
        }
        strip_content(m);
    }

    static void strip_content(std::map<uint64_t, BigInt>& m) {
        if (m.empty()) return;
        BigInt g(0);
        for (const auto& [id, v] : m) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) return;
        }
        for (auto& [id, v] : m) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }

    std::vector<Row> rows_;
    std::unordered_map<uint64_t, size_t> pivot_;
};

// Conversions between Element terms and id rows.

inline RowSpace::Row element_to_row(const ElementQ& x) {
    BigInt den(1);
    for (const auto& [w, c] : x.terms()) den = big_lcm(den, c.den());
    RowSpace::Row r;
    r.reserve(x.term_count());
    for (const auto& [w, c] : x.terms())
        r.emplace_back(word_id(w, x.dim()), c.num() * (den / c.den()));
    return r;  // Element iteration is already ascending in the graded order
}

template <class Coeff>
std::map<uint64_t, Coeff> element_to_coeff_row(const Element<Coeff>& x) {
    std::map<uint64_t, Coeff> m;
    for (const auto& [w, c] : x.terms()) m.emplace(word_id(w, x.dim()), c);
    return m;
}

template <class Coeff>
Element<Coeff> row_to_element(const std::map<uint64_t, Coeff>& m, int dim) {
    Element<Coeff> x(dim);
    for (const auto& [id, c] : m) x.add_term(word_from_id(id, dim), c);
    return x;
}

// Rank bookkeeping over Element rows; used for independence checks.
class ElementSpan {
public:
    bool insert(const ElementQ& x) { return space_.insert(element_to_row(x)).has_value(); }
    size_t dim() const { return space_.size(); }

private:
    RowSpace space_;
};

}  // namespace spinclif
