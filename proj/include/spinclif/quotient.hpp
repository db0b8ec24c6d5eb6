#pragma once

// Truncation-degree filtered quotients of the free tensor algebra by a
// two-sided ideal given through relation generators.
//
// The ideal segment at degree <= D+H is computed by closing the span of the
// generators under left and right multiplication by basis letters, with an
// exact sparse row reduction; the degree-<=D part of that span is exactly
// the span of pivots whose lead has degree <= D (tails sit below leads in
// the graded order). Non-homogeneous relations can push low-degree ideal
// elements down from higher-degree products, which is why the headroom H
// exists and why dims should be audited against H+2.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinclif/metric.hpp"
#include "spinclif/rowspace.hpp"
#include "spinclif/transform.hpp"

namespace spinclif {

struct RelationFamily {
    std::string name;
    // all relation elements of degree <= bound; deterministic
    std::function<std::vector<ElementQ>(int bound)> generators;
};

class QuotientContext {
public:
    QuotientContext(MetricSpace space, RelationFamily relations, int max_degree, int headroom = 2)
        : space_(std::move(space)),
          relations_(std::move(relations)),
          max_degree_(max_degree),
          headroom_(headroom) {
        if (max_degree < 0 || headroom < 0)
            throw std::invalid_argument("QuotientContext: negative degree bound");
        build();
    }

    const MetricSpace& space() const { return space_; }
    const std::string& relation_name() const { return relations_.name; }
    int max_degree() const { return max_degree_; }
    int headroom() const { return headroom_; }
    size_t ideal_rank() const { return rows_.size(); }

    // cumulative dimension of the degree-<=d component, d = 0..max_degree
    const std::vector<int>& dims() const { return dims_; }

    std::vector<Word> quotient_basis() const {
        std::vector<Word> words;
        const int n = space_.dim();
        for (uint64_t id = 0; id < word_count_up_to(n, max_degree_); ++id)
            if (!rows_.has_pivot(id)) words.push_back(word_from_id(id, n));
        return words;
    }

    template <class Coeff>
    Element<Coeff> reduce(const Element<Coeff>& x) const {
        if (x.dim() != space_.dim()) throw std::invalid_argument("reduce: dimension mismatch");
        if (x.degree() > max_degree_)
            throw std::invalid_argument("reduce: element degree exceeds the truncation degree");
        return row_to_element(rows_.reduce(element_to_coeff_row(x)), space_.dim());
    }

private:
    void build() {
        const int n = space_.dim();
        const int bound = max_degree_ + headroom_;

        std::vector<uint64_t> offset(bound + 2), power(bound + 2);
        for (int d = 0; d <= bound + 1; ++d) {
            offset[d] = word_id_offset(n, d);
            power[d] = d == 0 ? 1 : power[d - 1] * n;
        }
        auto degree_of = [&](uint64_t id) {
            int d = 0;
            while (offset[d + 1] <= id) ++d;
            return d;
        };

        // worklist buckets keyed by lead degree; lower degrees first
        std::vector<std::vector<RowSpace::Row>> bucket(bound + 1);
        for (const ElementQ& g : relations_.generators(bound)) {
            if (g.is_zero()) throw std::invalid_argument("relation generator is zero");
            if (g.degree() > bound) continue;
            RowSpace::Row r = element_to_row(g);
            bucket[degree_of(r.back().first)].push_back(std::move(r));
        }

        auto shift_left = [&](const RowSpace::Row& r, int letter) {
            RowSpace::Row out;
            out.reserve(r.size());
            for (const auto& [id, v] : r) {
                int d = degree_of(id);
                out.emplace_back(offset[d + 1] + uint64_t(letter - 1) * power[d] + (id - offset[d]), v);
            }
            return out;
        };
        auto shift_right = [&](const RowSpace::Row& r, int letter) {
            RowSpace::Row out;
            out.reserve(r.size());
            for (const auto& [id, v] : r) {
                int d = degree_of(id);
                out.emplace_back(offset[d + 1] + (id - offset[d]) * n + uint64_t(letter - 1), v);
            }
            return out;
        };

        while (true) {
            int d = -1;
            for (int k = 0; k <= bound; ++k)
                if (!bucket[k].empty()) { d = k; break; }
            if (d < 0) break;
            RowSpace::Row r = std::move(bucket[d].back());
            bucket[d].pop_back();
            auto lead = rows_.insert(r);
            if (!lead) continue;
            const RowSpace::Row& prow = rows_.row_for_pivot(*lead);
            if (degree_of(*lead) + 1 <= bound) {
                for (int a = 1; a <= n; ++a) {
                    bucket[degree_of(*lead) + 1].push_back(shift_left(prow, a));
                    bucket[degree_of(*lead) + 1].push_back(shift_right(prow, a));
                }
            }
        }

        rows_.interreduce(word_count_up_to(n, max_degree_) - 1);

        // cumulative quotient dimensions per degree
        dims_.assign(max_degree_ + 1, 0);
        std::vector<int> pivots_per_degree(max_degree_ + 1, 0);
        for (uint64_t id : rows_.pivot_ids()) {
            int d = word_degree_of_id(id, n);
            if (d <= max_degree_) ++pivots_per_degree[d];
        }
        int cumulative = 0;
        uint64_t words = 0, pw = 1;
        for (int d = 0; d <= max_degree_; ++d) {
            words += pw;
            pw *= n;
            cumulative += pivots_per_degree[d];
            dims_[d] = static_cast<int>(words - cumulative);
        }
    }

    MetricSpace space_;
    RelationFamily relations_;
    int max_degree_;
    int headroom_;
    RowSpace rows_;
    std::vector<int> dims_;
};

struct StabilizationAudit {
    bool stabilized;
    std::vector<int> dims;          // at headroom H
    std::vector<int> dims_deeper;   // at headroom H + 2
};

// Rebuilds the context with two extra levels of headroom and compares the
// dimension sequences up to D.
inline StabilizationAudit audit_stabilization(const MetricSpace& space, const RelationFamily& rel,
                                              int max_degree, int headroom) {
    QuotientContext a(space, rel, max_degree, headroom);
    QuotientContext b(space, rel, max_degree, headroom + 2);
    return {a.dims() == b.dims(), a.dims(), b.dims()};
}

// ---------------------------------------------------------------------------
// Relation families

namespace relations {

inline RelationFamily free_algebra() {
    return {"free", [](int) { return std::vector<ElementQ>{}; }};
}

// v.w + w.v - 2 g(v,w), spanned by basis pairs.
inline RelationFamily clifford(const MetricSpace& space) {
    return {"clifford", [space](int bound) {
                std::vector<ElementQ> gens;
                if (bound < 2) return gens;
                const int n = space.dim();
                for (int a = 1; a <= n; ++a)
                    for (int b = a; b <= n; ++b) {
                        ElementQ g(n);
                        g.add_term(Word{a, b}, Rational(1));
                        g.add_term(Word{b, a}, Rational(1));
                        g.add_term(Word{}, Rational(-2) * space.g(a, b));
                        gens.push_back(std::move(g));
                    }
                return gens;
            }};
}

// (a^b).c - c.(a^b) - g(a,c) b + g(b,c) a, spanned by basis bivectors.
inline RelationFamily weak_clifford(const MetricSpace& space) {
    return {"weak", [space](int bound) {
                std::vector<ElementQ> gens;
                if (bound < 3) return gens;
                const int n = space.dim();
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b) {
                        ElementQ blade = wedge(ElementQ::basis_vector(a, n), ElementQ::basis_vector(b, n));
                        for (int c = 1; c <= n; ++c) {
                            ElementQ ec = ElementQ::basis_vector(c, n);
                            ElementQ g = blade * ec - ec * blade;
                            g -= space.g(a, c) * ElementQ::basis_vector(b, n);
                            g += space.g(b, c) * ElementQ::basis_vector(a, n);
                            gens.push_back(std::move(g));
                        }
                    }
                return gens;
            }};
}

// a.b - b.a: the spin-0 construction imposed directly on T(E).
inline RelationFamily symmetric(const MetricSpace& space) {
    return {"sym", [space](int bound) {
                std::vector<ElementQ> gens;
                if (bound < 2) return gens;
                const int n = space.dim();
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b) {
                        ElementQ g(n);
                        g.add_term(Word{a, b}, Rational(1));
                        g.add_term(Word{b, a}, Rational(-1));
                        gens.push_back(std::move(g));
                    }
                return gens;
            }};
}

// Images of the order-(2s+1) multipoles, rewritten in vector words through
// the weak generator/bivector dictionary. Defined for s >= 1/2; the spin-0
// case must use the symmetric family instead.
inline RelationFamily spin_ideal(HalfInt s) {
    if (s.is_zero())
        throw std::invalid_argument("spin_ideal: spin 0 has no bivector presentation; use the symmetric relations");
    const int k = s.twice() + 1;  // 2s + 1
    return {"spin-ideal:" + s.str(), [k](int bound) {
                std::vector<ElementQ> gens;
                if (bound < 2 * k) return gens;
                std::vector<int> word(k, 1);
                while (true) {
                    gens.push_back(embed_generators(multipole(k, word)));
                    int i = k - 1;
                    while (i >= 0 && word[i] == 3) { word[i] = 1; --i; }
                    if (i < 0) break;
                    ++word[i];
                }
                return gens;
            }};
}

// The Casimir character at spin s, in vector words: sum_p Jp.Jp + s(s+1).
// The multipole ideal alone leaves degenerate components behind (any algebra
// map sending all vectors to zero kills every multipole image but not this
// element), so fixing the Casimir value is part of the spin-s data.
inline ElementQ casimir_character_element(HalfInt s) {
    ElementQ acc = ElementQ::scalar(s.s_times_s_plus_one(), 3);
    for (int p = 1; p <= 3; ++p) {
        ElementQ jp = generator_bivector(p);
        acc += jp * jp;
    }
    return acc;
}

// The spin-s weak Clifford algebra over (E, delta): weak relations, the
// order-(2s+1) multipole ideal, and the Casimir character C = -s(s+1).
inline RelationFamily spin_weak(HalfInt s) {
    RelationFamily weak = weak_clifford(MetricSpace::euclidean(3));
    RelationFamily ideal = spin_ideal(s);
    return {"spin:" + s.str(), [weak, ideal, s](int bound) {
                auto gens = weak.generators(bound);
                auto extra = ideal.generators(bound);
                gens.insert(gens.end(), extra.begin(), extra.end());
                if (bound >= 4) gens.push_back(casimir_character_element(s));
                return gens;
            }};
}

// A(s) presented over generator letters: bracket rewriting, multipoles, and
// the Casimir character.
inline RelationFamily spin_enveloping(HalfInt s) {
    const int k = s.twice() + 1;
    const Rational cas = s.s_times_s_plus_one();
    return {"spin-uea:" + s.str(), [k, cas](int bound) {
                std::vector<ElementQ> gens;
                if (bound >= 2) {
                    for (int a = 1; a <= 3; ++a)
                        for (int b = a + 1; b <= 3; ++b) {
                            ElementQ g(3);
                            g.add_term(Word{a, b}, Rational(1));
                            g.add_term(Word{b, a}, Rational(-1));
                            for (int c = 1; c <= 3; ++c) {
                                int eps = epsilon(a, b, c);
                                if (eps) g.add_term(Word{c}, Rational(-eps));
                            }
                            gens.push_back(std::move(g));
                        }
                    ElementQ c = casimir_free();
                    c.add_term(Word{}, cas);
                    gens.push_back(std::move(c));
                }
                if (bound >= k) {
                    std::vector<int> word(k, 1);
                    while (true) {
                        gens.push_back(multipole(k, word).as_free());
                        int i = k - 1;
                        while (i >= 0 && word[i] == 3) { word[i] = 1; --i; }
                        if (i < 0) break;
                        ++word[i];
                    }
                }
                return gens;
            }};
}

}  // namespace relations

// Dimension of the unital subalgebra generated by the given (already reduced
// or reducible) elements inside the quotient, by closing the span under
// right multiplication by the generators.
inline int unital_subalgebra_dimension(const QuotientContext& ctx, const std::vector<ElementQ>& gens) {
    ElementSpan span;
    std::vector<ElementQ> basis;
    auto add = [&](const ElementQ& x) {
        ElementQ r = ctx.reduce(x);
        if (r.is_zero()) return;
        if (span.insert(r)) basis.push_back(std::move(r));
    };
    add(ElementQ::unit(ctx.space().dim()));
    for (const auto& g : gens) add(g);
    for (size_t head = 0; head < basis.size(); ++head) {
        ElementQ current = basis[head];
        for (const auto& g : gens) add(current * g);
    }
    return static_cast<int>(span.dim());
}

}  // namespace spinclif
