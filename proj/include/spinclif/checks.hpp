#pragma once

// The verification suites: every named identity the library claims, run as
// exact (or, for the representation oracle, toleranced) checks with a
// uniform report row. The CLI's `verify` command and the acceptance runner
// both drive these.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinclif/geometry.hpp"
#include "spinclif/monopole.hpp"
#include "spinclif/quotient.hpp"
#include "spinclif/spinrep.hpp"

namespace spinclif {

struct CheckResult {
    std::string name;
    std::string statement;  // what identity was checked
    std::string value;      // residual, dimension or computed value
    bool pass = false;
};

inline CheckResult make_check(std::string name, std::string statement, bool pass,
                              std::string value = "") {
    return {std::move(name), std::move(statement), std::move(value), pass};
}

// Heavy quotient contexts are shared between suites.
class ContextCache {
public:
    const QuotientContext& get(const std::string& key,
                               const std::function<QuotientContext()>& make) {
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, std::make_unique<QuotientContext>(make())).first;
        return *it->second;
    }

    const QuotientContext& weak_spinless(int degree = 6, int headroom = 2) {
        auto space = MetricSpace::euclidean(3);
        return get("weak:" + std::to_string(degree) + ":" + std::to_string(headroom),
                   [&] { return QuotientContext(space, relations::weak_clifford(space), degree, headroom); });
    }
    const QuotientContext& clifford(int degree = 6, int headroom = 2) {
        auto space = MetricSpace::euclidean(3);
        return get("clifford:" + std::to_string(degree) + ":" + std::to_string(headroom),
                   [&] { return QuotientContext(space, relations::clifford(space), degree, headroom); });
    }
    const QuotientContext& spin_weak(HalfInt s, int degree, int headroom = 2) {
        auto space = MetricSpace::euclidean(3);
        return get("spin:" + s.str() + ":" + std::to_string(degree) + ":" + std::to_string(headroom),
                   [&] { return QuotientContext(space, relations::spin_weak(s), degree, headroom); });
    }
    const QuotientContext& spin_enveloping(HalfInt s, int degree = 6, int headroom = 2) {
        auto space = MetricSpace::euclidean(3);
        return get("spin-uea:" + s.str() + ":" + std::to_string(degree) + ":" + std::to_string(headroom),
                   [&] { return QuotientContext(space, relations::spin_enveloping(s), degree, headroom); });
    }
    const QuotientContext& symmetric(int degree = 3, int headroom = 2) {
        auto space = MetricSpace::euclidean(3);
        return get("sym:" + std::to_string(degree) + ":" + std::to_string(headroom),
                   [&] { return QuotientContext(space, relations::symmetric(space), degree, headroom); });
    }

private:
    std::map<std::string, std::unique_ptr<QuotientContext>> cache_;
};

namespace checks_detail {

inline std::string dims_str(const std::vector<int>& dims) {
    std::string s;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(dims[i]);
    }
    return s;
}

inline ElementQ casimir_vector_image() {
    ElementQ acc(3);
    for (int p = 1; p <= 3; ++p) {
        ElementQ jp = generator_bivector(p);
        acc += jp * jp;
    }
    return acc;
}

inline ElementQ basis_wedge(int a, int b) {
    return wedge(ElementQ::basis_vector(a, 3), ElementQ::basis_vector(b, 3));
}

// Random rational with numerator in [-3,3], small denominator.
inline Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 7) - 3;
    long den = 1 + static_cast<long>(rng() % 3);
    return Rational(num, den);
}

inline RatVec random_vector(std::mt19937_64& rng, int n) {
    RatVec v(n);
    for (auto& c : v) c = random_rational(rng);
    return v;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace checks_detail

// --- multipole properties ---------------------------------------------------

inline std::vector<CheckResult> suite_multipoles(int kmax = 4) {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    for (int k = 0; k <= kmax; ++k) {
        std::map<std::vector<int>, PBWElement> mu;
        for (const auto& w : all_words(3, k)) mu.emplace(w, multipole(k, w));

        bool eigen = true;
        for (const auto& [w, m] : mu) {
            PBWElement r = ad_casimir(m) + Rational(k * (k + 1)) * m;
            if (!r.is_zero()) eigen = false;
        }
        out.push_back(make_check("multipole-eigen-k" + std::to_string(k),
                                 "ad(C + k(k+1)) annihilates every order-" + std::to_string(k) +
                                     " multipole",
                                 eigen));

        bool symmetric = true;
        if (k >= 2) {
            for (const auto& [w, m] : mu)
                for (const auto& tau : all_permutations(k)) {
                    std::vector<int> pw(k);
                    for (int i = 0; i < k; ++i) pw[i] = w[tau[i]];
                    if (!(mu.at(pw) == m)) symmetric = false;
                }
        }
        out.push_back(make_check("multipole-symmetry-k" + std::to_string(k),
                                 "order-" + std::to_string(k) +
                                     " multipoles are invariant under every slot permutation",
                                 symmetric));

        bool contractionless = true;
        if (k >= 2) {
            for (int m1 = 0; m1 < k && contractionless; ++m1)
                for (int m2 = m1 + 1; m2 < k && contractionless; ++m2)
                    for (const auto& base : all_words(3, k - 2)) {
                        PBWElement sum;
                        for (int a = 1; a <= 3; ++a) {
                            std::vector<int> w;
                            size_t src = 0;
                            for (int i = 0; i < k; ++i) {
                                if (i == m1 || i == m2) w.push_back(a);
                                else w.push_back(base[src++]);
                            }
                            sum += mu.at(w);
                        }
                        if (!sum.is_zero()) contractionless = false;
                    }
        }
        out.push_back(make_check("multipole-contractionless-k" + std::to_string(k),
                                 "metric traces over every slot pair of order-" + std::to_string(k) +
                                     " multipoles vanish",
                                 contractionless));
    }
    return out;
}

// --- strong Clifford spin-1/2 structure --------------------------------------

inline std::vector<CheckResult> suite_clifford_spin_half(ContextCache& cache) {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    const QuotientContext& ctx = cache.clifford();
    const auto conv = GeneratorConvention::strong;

    std::array<ElementQ, 4> jp{ElementQ(3), ElementQ(3), ElementQ(3), ElementQ(3)};
    for (int p = 1; p <= 3; ++p) jp[p] = generator_bivector(p, conv);

    bool sym_ok = true;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            ElementQ lhs = ctx.reduce(Rational(1, 2) * (jp[p] * jp[q] + jp[q] * jp[p]));
            ElementQ rhs = ElementQ::scalar(p == q ? Rational(-1, 4) : Rational(0), 3);
            if (lhs != rhs) sym_ok = false;
        }
    out.push_back(make_check("clifford-symmetric-bivectors",
                             "(J'p J'q + J'q J'p)/2 reduces to -1/4 delta_pq in Cl(E,delta)", sym_ok));

    ElementQ cas(3);
    for (int p = 1; p <= 3; ++p) cas += jp[p] * jp[p];
    ElementQ cas_red = ctx.reduce(cas);
    out.push_back(make_check("clifford-casimir",
                             "sum_p J'p.J'p reduces to -3/4 in Cl(E,delta)",
                             cas_red == ElementQ::scalar(Rational(-3, 4), 3), cas_red.str()));

    bool quad_ok = true;
    for (const auto& w : all_words(3, 2))
        if (!ctx.reduce(embed_generators(multipole(2, w), conv)).is_zero()) quad_ok = false;
    out.push_back(make_check("clifford-quadrupole-vanishing",
                             "all nine order-2 multipole images vanish in Cl(E,delta)", quad_ok));

    int dim = unital_subalgebra_dimension(ctx, {jp[1], jp[2], jp[3]});
    out.push_back(make_check("clifford-bivector-subalgebra-dim",
                             "the unital subalgebra generated by bivectors has dimension 4",
                             dim == 4, std::to_string(dim)));

    bool bracket_ok = true;
    for (int p = 1; p <= 3 && bracket_ok; ++p)
        for (int q = 1; q <= 3 && bracket_ok; ++q) {
            ElementQ lhs = jp[p] * jp[q] - jp[q] * jp[p];
            ElementQ rhs(3);
            for (int r = 1; r <= 3; ++r)
                if (epsilon(p, q, r)) rhs += Rational(epsilon(p, q, r)) * jp[r];
            if (ctx.reduce(lhs - rhs) != ElementQ::zero(3)) bracket_ok = false;
        }
    out.push_back(make_check("clifford-generator-bracket",
                             "[J'p, J'q] = sum_r eps_pqr J'r holds after reduction", bracket_ok));

    bool lie_ok = true;
    for (int a = 1; a <= 3 && lie_ok; ++a)
        for (int b = 1; b <= 3 && lie_ok; ++b)
            for (int c = 1; c <= 3 && lie_ok; ++c)
                for (int d = 1; d <= 3 && lie_ok; ++d) {
                    ElementQ ab = basis_wedge(a, b), cd = basis_wedge(c, d);
                    ElementQ lhs = ab * cd - cd * ab;
                    auto g = [&](int x, int y) { return ctx.space().g(x, y); };
                    ElementQ rhs = Rational(2) * g(b, c) * basis_wedge(a, d) -
                                   Rational(2) * g(b, d) * basis_wedge(a, c) -
                                   Rational(2) * g(a, c) * basis_wedge(b, d) +
                                   Rational(2) * g(a, d) * basis_wedge(b, c);
                    if (!ctx.reduce(lhs - rhs).is_zero()) lie_ok = false;
                }
    out.push_back(make_check("clifford-bivector-lie-product",
                             "[a^b, c^d] = 2g(b,c)a^d - 2g(b,d)a^c - 2g(a,c)b^d + 2g(a,d)b^c "
                             "in Cl(E,delta)",
                             lie_ok));
    return out;
}

// --- the f-tensor closure constraint -----------------------------------------

inline std::vector<CheckResult> suite_f_constraint(uint64_t seed = 7) {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    auto space = MetricSpace::euclidean(3);

    FConstraintSolution sol = solve_f_constraint(space);
    out.push_back(make_check("f-solve-family",
                             "the commutator family (k,-k,0) satisfies the closure constraint",
                             sol.family_confirmed));
    out.push_back(make_check("f-solve-variety",
                             "the closure equations admit no solutions beyond the two certified "
                             "lines (quadratic rank 4)",
                             sol.variety_pinned, "rank " + std::to_string(sol.quadratic_rank)));
    out.push_back(make_check("f-solve-cyclic-filter",
                             "the cyclic identity keeps (k,-k,0) and excludes (k,k,-k)",
                             sol.cyclic_excludes_other, sol.description));

    out.push_back(make_check("f-check-commutator",
                             "check_f_constraint(1/2, -1/2, 0) has empty residual",
                             check_f_constraint(Rational(1, 2), Rational(-1, 2), Rational(0), space)
                                 .is_zero()));

    std::mt19937_64 rng(seed);
    int failures = 0;
    int tried = 0;
    while (tried < 20) {
        Rational k1 = random_rational(rng), k2 = random_rational(rng), k3 = random_rational(rng);
        bool on_commutator = k3.is_zero() && (k1 + k2).is_zero();
        bool on_alternating = (k1 - k2).is_zero() && (k1 + k3).is_zero();
        bool trivial = k1.is_zero() && k2.is_zero() && k3.is_zero();
        if (on_commutator || on_alternating || trivial) continue;
        ++tried;
        if (check_f_constraint(k1, k2, k3, space).is_zero()) ++failures;
    }
    out.push_back(make_check("f-check-random-failures",
                             "20 random triples off the solution lines all violate the constraint",
                             failures == 0));

    bool grid_ok = true;
    for (Rational k3 : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)})
        for (long k1v : {-1L, 0L, 1L}) {
            Rational k1(k1v), k2 = -k1;
            if (check_f_constraint(k1, k2, k3, space).is_zero()) grid_ok = false;
        }
    out.push_back(make_check("f-check-k3-grid",
                             "no solution with k3 in {+-1, +-1/2} on the commutator-linear slice",
                             grid_ok));
    return out;
}

// --- reflection calculus over three signatures --------------------------------

inline std::vector<CheckResult> suite_reflections(uint64_t seed = 11, int cases = 200) {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);

    const std::vector<std::pair<int, int>> signatures{{3, 0}, {1, 1}, {1, 3}};
    for (auto [p, q] : signatures) {
        MetricSpace space = MetricSpace::signature(p, q);
        const int n = space.dim();
        std::string sig = "(" + std::to_string(p) + "," + std::to_string(q) + ")";

        auto draw_non_null = [&] {
            while (true) {
                RatVec v = random_vector(rng, n);
                if (!space.pair(v, v).is_zero()) return v;
            }
        };

        bool isometry = true, scale_fails = true, comm = true, anti = true, parts_sum = true;
        bool mixed_minus = true, mixed_plus = true, t_closure = true, t_props = true;
        for (int i = 0; i < cases; ++i) {
            RatVec a = draw_non_null(), b = draw_non_null(), c = draw_non_null();
            RatVec v = random_vector(rng, n), w = random_vector(rng, n);
            Rational gaa = space.pair(a, a), gbb = space.pair(b, b);

            Endomorphism ra = conformal_reflection(a, space), rb = conformal_reflection(b, space);
            if (space.pair(ra.apply(v), ra.apply(w)) != gaa * gaa * space.pair(v, w))
                isometry = false;
            // k outside {1,-1} must break the conformal property on v = w = a
            Endomorphism s2 = scale_map(Rational(2), a, space);
            if (space.pair(s2.apply(a), s2.apply(a)) == gaa * gaa * gaa) scale_fails = false;

            Endomorphism t_ab = t_map(a, b, space);
            if (ra * rb - rb * ra != (Rational(-4) * space.pair(a, b)) * t_ab) comm = false;
            auto [plus, minus] = adjoint_parts(ra * rb);
            if (plus + minus != ra * rb) parts_sum = false;
            if (minus != (Rational(-2) * space.pair(a, b)) * t_ab) anti = false;
            if (plus != (gaa * gbb) * Endomorphism::identity(space) + Rational(2) * (t_ab * t_ab))
                anti = false;

            Endomorphism t_bc = t_map(b, c, space);
            auto [mp, mm] = adjoint_parts(ra * t_bc);
            Endomorphism rhs_minus = Rational(1, 2) * (t_map(ra.apply(b), c, space) +
                                                       t_map(b, ra.apply(c), space));
            if (mm != rhs_minus) mixed_minus = false;

            // the companion identity applies R to t-images; reject null draws
            RatVec tab_c = t_map(a, b, space).apply(c);
            RatVec tac_b = t_map(a, c, space).apply(b);
            if (!space.is_null(tab_c) && !space.is_null(tac_b) && !is_zero_vec(tab_c) &&
                !is_zero_vec(tac_b)) {
                Rational gac = space.pair(a, c), gab = space.pair(a, b);
                Endomorphism lhs = space.pair(b, c) * mp;
                Endomorphism rhs = Rational(1, 2) *
                                   (gac * gac * rb - gab * gab * conformal_reflection(c, space) -
                                    conformal_reflection(tab_c, space) +
                                    conformal_reflection(tac_b, space));
                if (lhs != rhs) mixed_plus = false;
            }

            RatVec d = random_vector(rng, n);
            Endomorphism t_cd = t_map(c, d, space);
            if (t_ab * t_cd - t_cd * t_ab !=
                t_map(t_ab.apply(c), d, space) + t_map(c, t_ab.apply(d), space))
                t_closure = false;

            if (t_map(b, a, space) != -t_ab) t_props = false;
            if (g_adjoint(t_ab) != -t_ab) t_props = false;
        }
        out.push_back(make_check("reflect-isometry" + sig,
                                 "g(R(a)v, R(a)w) = g(a,a)^2 g(v,w), and k=2 breaks it", isometry && scale_fails));
        out.push_back(make_check("reflect-commutator" + sig,
                                 "R(a)R(b) - R(b)R(a) = -4 g(a,b) t(a,b)", comm));
        out.push_back(make_check("reflect-adjoint-parts" + sig,
                                 "a-(R(a)R(b)) = -2g(a,b) t(a,b) and a+(R(a)R(b)) = "
                                 "g(a,a)g(b,b) id + 2 t(a,b)^2",
                                 anti && parts_sum));
        out.push_back(make_check("reflect-mixed-anti" + sig,
                                 "a-(R(a) t(b,c)) = (t(R(a)b, c) + t(b, R(a)c))/2", mixed_minus));
        out.push_back(make_check("reflect-mixed-self" + sig,
                                 "g(b,c) a+(R(a) t(b,c)) = (g(a,c)^2 R(b) - g(a,b)^2 R(c) - "
                                 "R(t(a,b)c) + R(t(a,c)b))/2",
                                 mixed_plus));
        out.push_back(make_check("reflect-t-closure" + sig,
                                 "[t(a,b), t(c,d)] = t(t(a,b)c, d) + t(c, t(a,b)d)", t_closure));
        out.push_back(make_check("reflect-t-antisymmetry" + sig,
                                 "t(b,a) = -t(a,b) and t is anti-self-adjoint", t_props));

        if (q > 0) {
            bool null_ok = true, bilinear_ok = true;
            for (int i = 0; i < cases / 4; ++i) {
                // rational null vectors: (u^2+v^2, 2uv) pattern in a random
                // timelike/spacelike coordinate pair
                long u = 1 + static_cast<long>(rng() % 5), vv = 1 + static_cast<long>(rng() % 5);
                RatVec b0(n, Rational(0));
                int ti = 0;                                 // a +1 slot
                int si = p + static_cast<int>(rng() % q);   // a -1 slot
                b0[ti] = Rational(u * u + vv * vv);
                b0[si] = Rational(2 * u * vv);
                if (q > 1) {
                    int sj = p + static_cast<int>(rng() % q);
                    if (sj != si) {
                        b0[si] = Rational(2 * u * vv);
                        b0[sj] = Rational(u * u - vv * vv);
                    }
                }
                if (!space.is_null(b0)) continue;  // only exact null draws
                auto [pp, nn] = decompose_null(b0, space);
                Rational gpp = space.pair(pp, pp);
                if (!(space.pair(pp, nn).is_zero() && gpp == -space.pair(nn, nn) &&
                      gpp.sign() > 0))
                    null_ok = false;
                for (int t = 0; t < n; ++t)
                    if (pp[t] + nn[t] != b0[t]) null_ok = false;
                RatVec aa = random_vector(rng, n);
                if (t_map(aa, b0, space) !=
                    t_map(aa, pp, space) + t_map(aa, nn, space))
                    bilinear_ok = false;
            }
            out.push_back(make_check("reflect-null-decomposition" + sig,
                                     "null b splits as p + n with g(p,p) = -g(n,n) > 0, "
                                     "g(p,n) = 0, and t(a,b) = t(a,p) + t(a,n)",
                                     null_ok && bilinear_ok));
        }
    }
    return out;
}

// --- spinless weak Clifford algebra ------------------------------------------

inline std::vector<CheckResult> suite_weak_spinless(ContextCache& cache, int degree = 6,
                                                    int headroom = 2) {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    auto space = MetricSpace::euclidean(3);
    const QuotientContext& ctx = cache.weak_spinless(degree, headroom);

    StabilizationAudit audit = audit_stabilization(space, relations::weak_clifford(space), degree, headroom);
    out.push_back(make_check("weak-stabilization-audit",
                             "dimension sequence is identical at headroom H and H+2",
                             audit.stabilized, dims_str(audit.dims)));

    bool defining = true;
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                ElementQ blade = basis_wedge(a, b);
                ElementQ ec = ElementQ::basis_vector(c, 3);
                ElementQ lhs = ctx.reduce(blade * ec - ec * blade);
                ElementQ rhs = ctx.reduce(space.g(a, c) * ElementQ::basis_vector(b, 3) -
                                          space.g(b, c) * ElementQ::basis_vector(a, 3));
                if (lhs != rhs) defining = false;
            }
    out.push_back(make_check("weak-defining-identity",
                             "(a^b)c - c(a^b) reduces to g(a,c)b - g(b,c)a on basis inputs",
                             defining));

    bool derivation = true;
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b)
            for (int x = 1; x <= 3; ++x)
                for (int y = 1; y <= 3; ++y) {
                    ElementQ blade = basis_wedge(a, b);
                    ElementQ ex = ElementQ::basis_vector(x, 3), ey = ElementQ::basis_vector(y, 3);
                    ElementQ whole = ctx.reduce(blade * (ex * ey) - (ex * ey) * blade);
                    ElementQ lx = ctx.reduce(blade * ex - ex * blade);
                    ElementQ ly = ctx.reduce(blade * ey - ey * blade);
                    if (whole != ctx.reduce(lx * ey + ex * ly)) derivation = false;
                }
    out.push_back(make_check("weak-derivation",
                             "the bivector action is a derivation on products of vectors",
                             derivation));

    bool lie = true;
    for (int a = 1; a <= 3 && lie; ++a)
        for (int b = 1; b <= 3 && lie; ++b)
            for (int c = 1; c <= 3 && lie; ++c)
                for (int d = 1; d <= 3 && lie; ++d) {
                    ElementQ ab = basis_wedge(a, b), cd = basis_wedge(c, d);
                    auto g = [&](int x, int y) { return space.g(x, y); };
                    ElementQ rhs = g(a, c) * basis_wedge(b, d) - g(b, c) * basis_wedge(a, d) -
                                   g(a, d) * basis_wedge(b, c) + g(b, d) * basis_wedge(a, c);
                    if (!ctx.reduce(ab * cd - cd * ab - rhs).is_zero()) lie = false;
                }
    out.push_back(make_check("weak-bivector-lie-product",
                             "[a^b, c^d] = g(a,c)b^d - g(b,c)a^d - g(a,d)b^c + g(b,d)a^c", lie));

    bool so3 = true;
    for (int p = 1; p <= 3 && so3; ++p)
        for (int q = 1; q <= 3 && so3; ++q) {
            ElementQ jp = generator_bivector(p), jq = generator_bivector(q);
            ElementQ rhs(3);
            for (int r = 1; r <= 3; ++r)
                if (epsilon(p, q, r)) rhs += Rational(epsilon(p, q, r)) * generator_bivector(r);
            if (!ctx.reduce(jp * jq - jq * jp - rhs).is_zero()) so3 = false;
        }
    out.push_back(make_check("weak-so3-bracket",
                             "[Jp, Jq] = sum_r eps_pqr Jr under Jp = 1/2 eps_abp e_a^e_b", so3));

    bool action = true;
    for (int a = 1; a <= 3 && action; ++a)
        for (int b = a + 1; b <= 3 && action; ++b)
            for (int c = 1; c <= 3 && action; ++c) {
                ElementQ blade = basis_wedge(a, b);
                ElementQ lhs = bivector_action(blade, ElementQ::basis_vector(c, 3), ctx);
                RatVec ec(3, Rational(0));
                ec[c - 1] = Rational(1);
                RatVec av(3, Rational(0)), bv(3, Rational(0));
                av[a - 1] = Rational(1);
                bv[b - 1] = Rational(1);
                RatVec image = t_map(av, bv, space).apply(ec);
                ElementQ rhs(3);
                for (int i = 1; i <= 3; ++i)
                    if (!image[i - 1].is_zero()) rhs += image[i - 1] * ElementQ::basis_vector(i, 3);
                if (lhs != ctx.reduce(rhs)) action = false;
            }
    out.push_back(make_check("weak-action-equals-t",
                             "l(a^b) on vectors coincides with the endomorphism t(a,b)", action));

    bool so_action = true;
    for (int a = 1; a <= 3 && so_action; ++a)
        for (int b = a + 1; b <= 3 && so_action; ++b)
            for (int c = 1; c <= 3 && so_action; ++c)
                for (int d = c + 1; d <= 3 && so_action; ++d)
                    for (int v = 1; v <= 3 && so_action; ++v) {
                        ElementQ b1 = basis_wedge(a, b), b2 = basis_wedge(c, d);
                        ElementQ ev = ElementQ::basis_vector(v, 3);
                        ElementQ lhs = bivector_action(b1, bivector_action(b2, ev, ctx), ctx) -
                                       bivector_action(b2, bivector_action(b1, ev, ctx), ctx);
                        ElementQ bracket = ctx.reduce(b1 * b2 - b2 * b1);
                        ElementQ rhs = bivector_action(bracket, ev, ctx);
                        if (lhs != rhs) so_action = false;
                    }
    out.push_back(make_check("weak-so-action",
                             "l(B1) l(B2) - l(B2) l(B1) = l([B1, B2]) on basis vectors", so_action));

    ElementSpan span;
    int independent = 0;
    for (int d0 = 0; d0 <= 2; ++d0)
        for (int d1 = 0; d0 + d1 <= 2; ++d1)
            for (int d2 = 0; d0 + d1 + d2 <= 2; ++d2) {
                PBWMonomial m;
                m.e = {static_cast<uint16_t>(d0), static_cast<uint16_t>(d1),
                       static_cast<uint16_t>(d2)};
                PBWElement x;
                x.add_term(m, Rational(1));
                if (span.insert(ctx.reduce(embed_generators(x)))) ++independent;
            }
    out.push_back(make_check("weak-uea-embedding",
                             "the 10 ordered generator monomials of degree <= 2 stay independent "
                             "after reduction",
                             independent == 10, std::to_string(independent) + "/10"));
    return out;
}

// --- spin-s weak Clifford algebras -------------------------------------------

inline std::vector<CheckResult> suite_spin_weak(ContextCache& cache, HalfInt s, int degree,
                                                int headroom = 2) {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    const QuotientContext& ctx = cache.spin_weak(s, degree, headroom);
    const QuotientContext& spinless = cache.weak_spinless(6, 2);
    std::string tag = "spin-" + s.str();

    ElementQ cas_red = ctx.reduce(casimir_vector_image());
    ElementQ expected = ElementQ::scalar(-s.s_times_s_plus_one(), 3);
    out.push_back(make_check(tag + "-casimir",
                             "the Casimir image reduces to -s(s+1)",
                             cas_red == expected, cas_red.str()));

    if (s.twice() == 1) {  // the fourth-order identity is the spin-1/2 one
        bool biv = true;
        std::vector<std::pair<int, int>> blades{{1, 2}, {1, 3}, {2, 3}};
        for (auto [a, b] : blades)
            for (auto [c, d] : blades) {
                ElementQ b1 = basis_wedge(a, b), b2 = basis_wedge(c, d);
                ElementQ lhs = ctx.reduce(Rational(1, 2) * (b1 * b2 + b2 * b1));
                Rational rhs = substitute_casimir(lambda_metric(b1, b2, ctx.space()), s);
                if (lhs != ElementQ::scalar(rhs, 3)) biv = false;
            }
        out.push_back(make_check(tag + "-bivector-identity",
                                 "(B1 B2 + B2 B1)/2 reduces to g_Lambda(B1,B2) at C = -3/4", biv));
    }

    bool action = true;
    for (int a = 1; a <= 3 && action; ++a)
        for (int b = a + 1; b <= 3 && action; ++b)
            for (int c = 1; c <= 3 && action; ++c) {
                ElementQ blade = basis_wedge(a, b);
                ElementQ ec = ElementQ::basis_vector(c, 3);
                ElementQ here = ctx.reduce(blade * ec - ec * blade);
                ElementQ there = spinless.reduce(blade * ec - ec * blade);
                if (here != there) action = false;
            }
    out.push_back(make_check(tag + "-action-unchanged",
                             "the bivector action on vectors agrees with the spinless context",
                             action));

    out.push_back(make_check(tag + "-dims", "dimension sequence of the truncated quotient", true,
                             dims_str(ctx.dims())));
    return out;
}

// --- metric values ------------------------------------------------------------

inline std::vector<CheckResult> suite_metric() {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    auto space = MetricSpace::euclidean(3);

    bool mon2 = true;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            CasimirPoly mon = monopole_part(PBWElement::generator(p) * PBWElement::generator(q));
            CasimirPoly expect = CasimirPoly::monomial(1, Rational(p == q ? 1 : 0, 3));
            if (mon != expect) mon2 = false;
        }
    out.push_back(make_check("mon-second-order", "Mon(Jp Jq) = (1/3) delta_pq C", mon2));

    bool mon3 = true;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= 3; ++r) {
                CasimirPoly mon = monopole_part(PBWElement::generator(p) *
                                                PBWElement::generator(q) * PBWElement::generator(r));
                CasimirPoly expect = CasimirPoly::monomial(1, Rational(epsilon(p, q, r), 6));
                if (mon != expect) mon3 = false;
            }
    out.push_back(make_check("mon-third-order", "Mon(Jp Jq Jr) = (1/6) eps_pqr C", mon3));

    // bivector-form cross-check of the extended metric against Mon
    bool mon_biv = true;
    for (int a = 1; a <= 3 && mon_biv; ++a)
        for (int b = 1; b <= 3 && mon_biv; ++b)
            for (int c = 1; c <= 3 && mon_biv; ++c)
                for (int d = 1; d <= 3 && mon_biv; ++d) {
                    if (a == b || c == d) continue;
                    ElementQ w1 = basis_wedge(a, b), w2 = basis_wedge(c, d);
                    PBWElement j1 = pbw_normal_form(bivector_to_generators(w1));
                    PBWElement j2 = pbw_normal_form(bivector_to_generators(w2));
                    CasimirPoly mon = monopole_part(j1 * j2);
                    if (mon != lambda_metric(w1, w2, space)) mon_biv = false;
                }
    out.push_back(make_check("metric-bivector-vs-mon",
                             "g_Lambda on bivectors equals Mon of the generator product", mon_biv));

    // trivector form: alternating combination of three Mon products
    {
        ElementQ w12 = basis_wedge(1, 2);
        auto monprod = [&](int c, int d, int e, int f) {
            PBWElement x = pbw_normal_form(bivector_to_generators(w12)) *
                           pbw_normal_form(bivector_to_generators(basis_wedge(c, d))) *
                           pbw_normal_form(bivector_to_generators(basis_wedge(e, f)));
            return monopole_part(x);
        };
        // arguments follow the alternating pattern for (a^b^c, d^e^f) = (e1^e2^e3, e1^e2^e3)
        CasimirPoly tri = monprod(3, 1, 2, 3);  // (c,d),(e,f) = (3,1),(2,3)
        CasimirPoly second = monprod(3, 2, 1, 3);
        CasimirPoly third;  // (3,3) blade vanishes
        CasimirPoly combined = tri - second + third;
        ElementQ t123 = wedge(ElementQ::basis_vector(1, 3), ElementQ::basis_vector(2, 3),
                              ElementQ::basis_vector(3, 3));
        out.push_back(make_check("metric-trivector-vs-mon",
                                 "g_Lambda on trivectors equals the alternating Mon combination",
                                 combined == lambda_metric(t123, t123, space), combined.str()));
    }

    bool biv_formula = true, tri_formula = true;
    std::vector<std::pair<int, int>> blades{{1, 2}, {1, 3}, {2, 3}};
    for (auto [a, b] : blades)
        for (auto [c, d] : blades) {
            auto base = [&](int i) {
                RatVec v(3, Rational(0));
                v[i - 1] = Rational(1);
                return v;
            };
            Rational gcb = cauchy_binet({base(a), base(b)}, {base(c), base(d)}, space);
            CasimirPoly lm = lambda_metric(basis_wedge(a, b), basis_wedge(c, d), space);
            if (lm != CasimirPoly::monomial(1, gcb * Rational(1, 3))) biv_formula = false;
        }
    {
        ElementQ t123 = wedge(ElementQ::basis_vector(1, 3), ElementQ::basis_vector(2, 3),
                              ElementQ::basis_vector(3, 3));
        CasimirPoly lm = lambda_metric(t123, t123, space);
        if (lm != CasimirPoly::monomial(1, Rational(-1, 3))) tri_formula = false;
    }
    out.push_back(make_check("metric-cauchy-binet-factors",
                             "g_Lambda = (1/3) g_CB C on bivectors and -(1/3) g_CB C on trivectors",
                             biv_formula && tri_formula));

    bool spins_ok = true;
    struct Row { const char* s; Rational biv; Rational tri; };
    std::vector<Row> rows{{"0", Rational(0), Rational(0)},
                          {"1/2", Rational(-1, 4), Rational(1, 4)},
                          {"1", Rational(-2, 3), Rational(2, 3)}};
    for (const auto& row : rows) {
        HalfInt s = HalfInt::parse(row.s);
        ElementQ b12 = basis_wedge(1, 2);
        ElementQ t123 = wedge(ElementQ::basis_vector(1, 3), ElementQ::basis_vector(2, 3),
                              ElementQ::basis_vector(3, 3));
        if (substitute_casimir(lambda_metric(b12, b12, space), s) != row.biv) spins_ok = false;
        if (substitute_casimir(lambda_metric(t123, t123, space), s) != row.tri) spins_ok = false;
    }
    out.push_back(make_check("metric-spin-values",
                             "substituted norms: bivector -s(s+1)/3, trivector +s(s+1)/3 "
                             "(0, -1/4|1/4, -2/3|2/3 for s = 0, 1/2, 1)",
                             spins_ok));

    // invariance of g_Lambda under the bivector action on blades
    auto act = [&](int p, const ElementQ& blade_elem) {
        // derivation action of Jp on each wedge factor via t
        // decompose blade coordinates and push t through each slot
        BladeCoordinates bc = blade_coordinates(blade_elem);
        auto base = [&](int i) {
            RatVec v(3, Rational(0));
            v[i - 1] = Rational(1);
            return v;
        };
        // t for Jp = 1/2 sum eps_abp t(ea, eb) = t(e_a, e_b) for the (a,b) with eps_abp = 1
        int a = p == 1 ? 2 : 1, b = p == 1 ? 3 : (p == 2 ? 3 : 2);
        if (p == 2) { a = 3; b = 1; }
        Endomorphism t = t_map(base(a), base(b), space);
        ElementQ out_elem(3);
        auto vec_to_elem = [&](const RatVec& v) {
            ElementQ e(3);
            for (int i = 1; i <= 3; ++i)
                if (!v[i - 1].is_zero()) e += v[i - 1] * ElementQ::basis_vector(i, 3);
            return e;
        };
        for (int i = 1; i <= 3; ++i)
            if (!bc.vector[i - 1].is_zero())
                out_elem += bc.vector[i - 1] * vec_to_elem(t.apply(base(i)));
        for (const auto& [ab, coeff] : bc.bivector) {
            out_elem += coeff * wedge(vec_to_elem(t.apply(base(ab.first))), vec_to_elem(base(ab.second)));
            out_elem += coeff * wedge(vec_to_elem(base(ab.first)), vec_to_elem(t.apply(base(ab.second))));
        }
        if (!bc.trivector.is_zero()) {
            std::array<RatVec, 3> vs{base(1), base(2), base(3)};
            for (int slot = 0; slot < 3; ++slot) {
                std::vector<ElementQ> factors;
                for (int j = 0; j < 3; ++j)
                    factors.push_back(vec_to_elem(j == slot ? t.apply(vs[j]) : vs[j]));
                out_elem += bc.trivector * wedge(factors);
            }
        }
        return out_elem;
    };
    bool invariance = true;
    std::vector<ElementQ> blade_basis;
    for (int i = 1; i <= 3; ++i) blade_basis.push_back(ElementQ::basis_vector(i, 3));
    for (auto [a, b] : blades) blade_basis.push_back(basis_wedge(a, b));
    blade_basis.push_back(wedge(ElementQ::basis_vector(1, 3), ElementQ::basis_vector(2, 3),
                                ElementQ::basis_vector(3, 3)));
    for (int p = 1; p <= 3; ++p)
        for (const auto& x : blade_basis)
            for (const auto& y : blade_basis) {
                CasimirPoly lhs = lambda_metric(act(p, x), y, space) + lambda_metric(x, act(p, y), space);
                if (!lhs.is_zero()) invariance = false;
            }
    out.push_back(make_check("metric-invariance",
                             "g_Lambda(l(B)x, y) + g_Lambda(x, l(B)y) = 0 on basis blades", invariance));

    bool symmetry = true;
    for (const auto& x : blade_basis)
        for (const auto& y : blade_basis)
            if (lambda_metric(x, y, space) != lambda_metric(y, x, space)) symmetry = false;
    out.push_back(make_check("metric-symmetry", "g_Lambda is symmetric on basis blades", symmetry));
    return out;
}

// --- spin-0 -------------------------------------------------------------------

inline std::vector<CheckResult> suite_spin_zero(ContextCache& cache) {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    auto space = MetricSpace::euclidean(3);
    const QuotientContext& ctx = cache.symmetric();

    bool comm = true;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            ElementQ x = ElementQ::basis_vector(a, 3), y = ElementQ::basis_vector(b, 3);
            if (!ctx.reduce(x * y - y * x).is_zero()) comm = false;
            for (int c = 1; c <= 3; ++c) {
                ElementQ z = ElementQ::basis_vector(b, 3) * ElementQ::basis_vector(c, 3);
                if (!ctx.reduce(x * z - z * x).is_zero()) comm = false;
            }
        }
    out.push_back(make_check("spin0-commutativity",
                             "x y - y x reduces to 0 for degree-1 and degree-2 arguments", comm));

    const std::vector<int> expected{1, 4, 10, 20};
    out.push_back(make_check("spin0-dims", "dimension sequence matches Sym(E): 1 4 10 20",
                             ctx.dims() == expected, dims_str(ctx.dims())));

    StabilizationAudit audit = audit_stabilization(space, relations::symmetric(space), 3, 2);
    out.push_back(make_check("spin0-stabilization-audit",
                             "dimension sequence is identical at headroom H and H+2",
                             audit.stabilized));

    HalfInt zero = HalfInt::parse("0");
    ElementQ b12 = basis_wedge(1, 2);
    ElementQ t123 = wedge(ElementQ::basis_vector(1, 3), ElementQ::basis_vector(2, 3),
                          ElementQ::basis_vector(3, 3));
    bool zeros = substitute_casimir(lambda_metric(b12, b12, space), zero).is_zero() &&
                 substitute_casimir(lambda_metric(t123, t123, space), zero).is_zero();
    out.push_back(make_check("spin0-metric-zeros",
                             "bivector and trivector norms vanish at spin 0", zeros));
    return out;
}

// --- representation oracle -----------------------------------------------------

inline std::vector<CheckResult> suite_rep() {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    const std::vector<const char*> spins{"0", "1/2", "1", "3/2", "2", "5/2", "3"};

    for (const char* ss : spins) {
        HalfInt s = HalfInt::parse(ss);
        SpinRep rep = spin_matrices(s);

        double constr = 0;
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                CMat lhs = commutator(rep.j[a - 1], rep.j[b - 1]);
                for (int c = 1; c <= 3; ++c)
                    if (epsilon(a, b, c)) lhs -= Complex(epsilon(a, b, c), 0) * rep.j[c - 1];
                constr = std::max(constr, lhs.max_abs());
            }
        CMat cas(rep.dim());
        for (int a = 0; a < 3; ++a) cas += rep.j[a] * rep.j[a];
        cas += Complex(s.s_times_s_plus_one().to_double(), 0) * CMat::identity(rep.dim());
        constr = std::max(constr, cas.max_abs());
        out.push_back(make_check("rep-construction-s" + std::string(ss),
                                 "bracket and Casimir residuals below 1e-12", constr < 1e-12));

        SpinIdealReport rpt = verify_spin_ideal(s);
        std::ostringstream vs;
        vs << "top " << rpt.max_top_residual << ", lower " << rpt.min_lower_norm;
        out.push_back(make_check("rep-spin-ideal-s" + std::string(ss),
                                 "order-(2s+1) multipole images vanish (< 1e-9) and lower orders "
                                 "survive (> 1e-6)",
                                 rpt.pass, vs.str()));

        int rank = multipole_span_rank(s);
        out.push_back(make_check("rep-span-rank-s" + std::string(ss),
                                 "multipole images of orders 0..2s span (2s+1)^2 dimensions",
                                 rank == s.dim() * s.dim(), std::to_string(rank)));
    }

    // numeric re-verification of the multipole properties for s <= 3;
    // residuals are taken relative to the magnitude of the multipole
    // matrices of the same order
    for (const char* ss : {"1", "2", "3"}) {
        HalfInt s = HalfInt::parse(ss);
        SpinRep rep = spin_matrices(s);
        double worst = 0;
        for (int k = 0; k <= s.twice() + 1; ++k) {
            std::map<std::vector<int>, CMat> mu;
            double scale = 1.0;
            for (const auto& w : all_words(3, k)) {
                auto it = mu.emplace(w, multipole_matrix(k, w, rep)).first;
                scale = std::max(scale, it->second.max_abs());
            }
            for (const auto& [w, m] : mu) {
                CMat eig = ad_casimir_matrix(m, rep) + Complex(k * (k + 1), 0) * m;
                worst = std::max(worst, eig.max_abs() / scale);
                for (int i = 0; i + 1 < k; ++i) {
                    std::vector<int> sw = w;
                    std::swap(sw[i], sw[i + 1]);
                    worst = std::max(worst, (mu.at(sw) - m).max_abs() / scale);
                }
            }
            if (k >= 2) {
                for (int m1 = 0; m1 < k; ++m1)
                    for (int m2 = m1 + 1; m2 < k; ++m2)
                        for (const auto& base : all_words(3, k - 2)) {
                            CMat sum(rep.dim());
                            for (int a = 1; a <= 3; ++a) {
                                std::vector<int> w;
                                size_t src = 0;
                                for (int i = 0; i < k; ++i) {
                                    if (i == m1 || i == m2) w.push_back(a);
                                    else w.push_back(base[src++]);
                                }
                                sum += mu.at(w);
                            }
                            worst = std::max(worst, sum.max_abs() / scale);
                        }
            }
        }
        std::ostringstream vs;
        vs << worst;
        out.push_back(make_check("rep-multipole-properties-s" + std::string(ss),
                                 "eigen, symmetry and contraction relative residuals below 1e-9 "
                                 "for k <= 2s+1",
                                 worst < 1e-9, vs.str()));
    }

    // monopole part consistency: A - Mon(A) is traceless in every irrep
    {
        bool ok = true;
        std::vector<PBWElement> monomials;
        for (int d0 = 0; d0 <= 3; ++d0)
            for (int d1 = 0; d0 + d1 <= 3; ++d1)
                for (int d2 = 0; d0 + d1 + d2 <= 3; ++d2) {
                    PBWMonomial m;
                    m.e = {static_cast<uint16_t>(d0), static_cast<uint16_t>(d1),
                           static_cast<uint16_t>(d2)};
                    PBWElement x;
                    x.add_term(m, Rational(1));
                    monomials.push_back(x);
                }
        for (const char* ss : {"1/2", "1", "3/2"}) {
            HalfInt s = HalfInt::parse(ss);
            SpinRep rep = spin_matrices(s);
            for (const auto& a : monomials) {
                CasimirPoly mon = monopole_part(a);
                CMat m = evaluate(a, rep);
                Complex tr = m.trace() - Complex(substitute_casimir(mon, s).to_double() * rep.dim(), 0);
                if (std::abs(tr) > 1e-9) ok = false;
            }
        }
        out.push_back(make_check("rep-monopole-trace",
                                 "evaluate(A) - Mon(A)(s) id is traceless for all degree-<=3 "
                                 "monomials",
                                 ok));
    }
    return out;
}

// --- cross-oracle: symbolic reduction vs numeric evaluation --------------------

inline std::vector<CheckResult> suite_cross_oracle(ContextCache& cache, uint64_t seed = 23,
                                                   int cases = 50) {
    using namespace checks_detail;
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);

    for (const char* ss : {"1/2", "1"}) {
        HalfInt s = HalfInt::parse(ss);
        const QuotientContext& ctx = cache.spin_enveloping(s);
        SpinRep rep = spin_matrices(s);
        Rational cval = -s.s_times_s_plus_one();

        double worst = 0;
        for (int t = 0; t < cases; ++t) {
            ElementC expr(3);
            int terms = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < terms; ++i) {
                int len = static_cast<int>(rng() % 5);
                std::vector<uint8_t> w;
                for (int j = 0; j < len; ++j) w.push_back(1 + static_cast<uint8_t>(rng() % 3));
                CasimirPoly coeff =
                    CasimirPoly(random_rational(rng)) +
                    CasimirPoly::monomial(1, rng() % 2 ? random_rational(rng) : Rational(0));
                expr.add_term(Word(w), coeff);
            }
            ElementC reduced = ctx.reduce(expr);
            auto substitute = [&](const ElementC& x) {
                ElementQ r(3);
                for (const auto& [w, c] : x.terms()) r.add_term(w, c.eval(cval));
                return r;
            };
            CMat diff = evaluate(substitute(expr), rep) - evaluate(substitute(reduced), rep);
            worst = std::max(worst, diff.max_abs());
        }
        std::ostringstream vs;
        vs << worst;
        out.push_back(make_check("cross-oracle-s" + std::string(ss),
                                 "reduce in the spin-s presentation matches spin-matrix evaluation "
                                 "on random degree-<=4 expressions (residual < 1e-9)",
                                 worst < 1e-9, vs.str()));
    }
    return out;
}

// --- registry -------------------------------------------------------------------

struct SuiteOptions {
    uint64_t seed = 2024;
    int kmax = 4;
    int reflection_cases = 200;
    int cross_cases = 50;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "multipoles", "clifford-spin-half", "f-constraint", "reflections", "weak-spinless",
        "spin-half",  "spin-one",           "metric",       "spin-zero",   "rep",
        "cross-oracle"};
    return names;
}

inline std::vector<CheckResult> run_suite(const std::string& name, ContextCache& cache,
                                          const SuiteOptions& opt = {}) {
    if (name == "multipoles") return suite_multipoles(opt.kmax);
    if (name == "clifford-spin-half") return suite_clifford_spin_half(cache);
    if (name == "f-constraint") return suite_f_constraint(opt.seed);
    if (name == "reflections") return suite_reflections(opt.seed, opt.reflection_cases);
    if (name == "weak-spinless") return suite_weak_spinless(cache);
    if (name == "spin-half") return suite_spin_weak(cache, HalfInt(1), 6);
    if (name == "spin-one") return suite_spin_weak(cache, HalfInt(2), 8);
    if (name == "metric") return suite_metric();
    if (name == "spin-zero") return suite_spin_zero(cache);
    if (name == "rep") return suite_rep();
    if (name == "cross-oracle") return suite_cross_oracle(cache, opt.seed, opt.cross_cases);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace spinclif
