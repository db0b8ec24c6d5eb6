#pragma once

// Endomorphism-level constructions over a metric space: component scaling
// maps, conformal reflections, g-adjoints, the bivector action t(a,b), the
// third-order tensor closure constraint, and the metric on antisymmetric
// tensors (Cauchy-Binet paired with the Casimir factor).

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinclif/metric.hpp"
#include "spinclif/quotient.hpp"
#include "spinclif/tensor_ops.hpp"

namespace spinclif {

class Endomorphism {
public:
    Endomorphism(MetricSpace space, RatMat m) : space_(std::move(space)), m_(std::move(m)) {
        if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
            throw std::invalid_argument("endomorphism shape does not match the space");
    }

    static Endomorphism identity(const MetricSpace& space) {
        return Endomorphism(space, RatMat::identity(space.dim()));
    }
    static Endomorphism zero(const MetricSpace& space) {
        return Endomorphism(space, RatMat(space.dim(), space.dim()));
    }

    const MetricSpace& space() const { return space_; }
    const RatMat& matrix() const { return m_; }
    RatVec apply(const RatVec& v) const { return m_.apply(v); }
    bool is_zero() const { return m_.is_zero(); }

    Endomorphism operator-() const { return {space_, -m_}; }
    friend Endomorphism operator+(const Endomorphism& a, const Endomorphism& b) {
        a.check(b);
        return {a.space_, a.m_ + b.m_};
    }
    friend Endomorphism operator-(const Endomorphism& a, const Endomorphism& b) {
        a.check(b);
        return {a.space_, a.m_ - b.m_};
    }
    // composition a after b
    friend Endomorphism operator*(const Endomorphism& a, const Endomorphism& b) {
        a.check(b);
        return {a.space_, a.m_ * b.m_};
    }
    friend Endomorphism operator*(const Rational& s, const Endomorphism& a) {
        return {a.space_, s * a.m_};
    }
    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return a.space_ == b.space_ && a.m_ == b.m_;
    }
    friend bool operator!=(const Endomorphism& a, const Endomorphism& b) { return !(a == b); }

private:
    void check(const Endomorphism& o) const {
        if (space_ != o.space_) throw std::invalid_argument("endomorphism space mismatch");
    }

    MetricSpace space_;
    RatMat m_;
};

// The unique A-bar with g(A v, w) = g(v, A-bar w); an involution.
inline Endomorphism g_adjoint(const Endomorphism& a) {
    const RatMat& g = a.space().matrix();
    return {a.space(), g.inverse() * a.matrix().transpose() * g};
}

// (self-adjoint part, anti-self-adjoint part); they sum back to A.
inline std::pair<Endomorphism, Endomorphism> adjoint_parts(const Endomorphism& a) {
    Endomorphism bar = g_adjoint(a);
    Rational half(1, 2);
    return {half * (a + bar), half * (a - bar)};
}

inline RatMat outer_with_metric_row(const MetricSpace& space, const RatVec& x, const RatVec& y) {
    // v |-> g(y, v) x  as a matrix: x (G y)^T
    const int n = space.dim();
    RatVec gy = space.matrix().apply(y);
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!x[i].is_zero() && !gy[j].is_zero()) m(i, j) = x[i] * gy[j];
    return m;
}

// S(k,a): v |-> g(a,a) v + (k-1) g(a,v) a, for non-null a.
inline Endomorphism scale_map(const Rational& k, const RatVec& a, const MetricSpace& space) {
    Rational gaa = space.pair(a, a);
    if (gaa.is_zero()) throw std::invalid_argument("scale_map: direction vector is null");
    RatMat m = gaa * RatMat::identity(space.dim());
    if (k != Rational(1)) m += (k - Rational(1)) * outer_with_metric_row(space, a, a);
    return {space, m};
}

// R(a) = S(-1,a): v |-> g(a,a) v - 2 g(a,v) a.
inline Endomorphism conformal_reflection(const RatVec& a, const MetricSpace& space) {
    return scale_map(Rational(-1), a, space);
}

// t(a,b): v |-> g(a,v) b - g(b,v) a; total in a and b by the closed formula.
inline Endomorphism t_map(const RatVec& a, const RatVec& b, const MetricSpace& space) {
    RatMat m = outer_with_metric_row(space, b, a) - outer_with_metric_row(space, a, b);
    return {space, std::move(m)};
}

// For a nonzero null vector b, produces (p, n) with
//   g(p,p) = -g(n,n) > 0,  g(p,n) = 0,  b = p + n,
// via a null partner c with g(b,c) > 0 (so c = p - n).
inline std::pair<RatVec, RatVec> decompose_null(const RatVec& b, const MetricSpace& space) {
    const int n = space.dim();
    bool zero = true;
    for (const auto& v : b)
        if (!v.is_zero()) zero = false;
    if (zero) throw std::invalid_argument("decompose_null: zero vector");
    if (!space.is_null(b)) throw std::invalid_argument("decompose_null: vector is not null");

    auto try_candidate = [&](RatVec c) -> std::optional<std::pair<RatVec, RatVec>> {
        if (!space.is_null(c)) return std::nullopt;
        Rational gbc = space.pair(b, c);
        if (gbc.is_zero()) return std::nullopt;
        if (gbc.sign() < 0)
            for (auto& v : c) v = -v;
        RatVec p(n), q(n);
        Rational half(1, 2);
        for (int i = 0; i < n; ++i) {
            p[i] = half * (b[i] + c[i]);
            q[i] = half * (b[i] - c[i]);
        }
        return std::make_pair(p, q);
    };

    // prefer simple null partners among basis vectors and basis pairs
    for (int i = 1; i <= n; ++i) {
        RatVec c(n, Rational(0));
        c[i - 1] = Rational(1);
        if (auto r = try_candidate(c)) return *r;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int sign : {1, -1}) {
                RatVec c(n, Rational(0));
                c[i - 1] = Rational(1);
                c[j - 1] = Rational(sign);
                if (auto r = try_candidate(c)) return *r;
            }
    // general construction: take any v with g(b,v) != 0 and cancel its norm
    for (int i = 1; i <= n; ++i) {
        RatVec v(n, Rational(0));
        v[i - 1] = Rational(1);
        Rational gbv = space.pair(b, v);
        if (gbv.is_zero()) continue;
        Rational gvv = space.pair(v, v);
        RatVec c = v;
        Rational f = gvv / (Rational(2) * gbv);
        for (int t = 0; t < n; ++t) c[t] -= f * b[t];
        if (auto r = try_candidate(c)) return *r;
    }
    throw std::domain_error("decompose_null: no null partner exists (metric not indefinite?)");
}

// ---------------------------------------------------------------------------
// The third-order tensor ansatz and its closure constraint.

// f(X,Y,Z) = k1 (XY - YX) Z + k2 Z (XY - YX) + k3 (X Z Y - Y Z X),
// extended multilinearly to tensor arguments.
inline ElementQ f_tensor(const Rational& k1, const Rational& k2, const Rational& k3,
                         const ElementQ& x, const ElementQ& y, const ElementQ& z) {
    ElementQ comm = x * y - y * x;
    ElementQ out = k1 * (comm * z) + k2 * (z * comm);
    if (!k3.is_zero()) out += k3 * (x * z * y - y * z * x);
    return out;
}

// Residual of f(f(a,b,c),d,e) + f(c,f(a,b,d),e) + f(f(c,d,a),b,e) + f(a,f(c,d,b),e)
// over all basis 5-tuples. Each tuple's contribution is prefixed with the
// tuple's own word so distinct tuples cannot cancel; empty iff satisfied.
inline ElementQ check_f_constraint(const Rational& k1, const Rational& k2, const Rational& k3,
                                   const MetricSpace& space) {
    const int n = space.dim();
    if (n < 2) throw std::invalid_argument("check_f_constraint: need dimension >= 2");
    ElementQ residual(n);
    std::vector<int> t(5, 1);
    auto basis = [&](int i) { return ElementQ::basis_vector(i, n); };
    while (true) {
        ElementQ a = basis(t[0]), b = basis(t[1]), c = basis(t[2]), d = basis(t[3]), e = basis(t[4]);
        auto f = [&](const ElementQ& x, const ElementQ& y, const ElementQ& z) {
            return f_tensor(k1, k2, k3, x, y, z);
        };
        ElementQ constraint = f(f(a, b, c), d, e) + f(c, f(a, b, d), e) + f(f(c, d, a), b, e) +
                              f(a, f(c, d, b), e);
        if (!constraint.is_zero()) {
            Word prefix{t[0], t[1], t[2], t[3], t[4]};
            residual += ElementQ::term(prefix, Rational(1), n) * constraint;
        }
        int i = 4;
        while (i >= 0 && t[i] == n) { t[i] = 1; --i; }
        if (i < 0) break;
        ++t[i];
    }
    return residual;
}

// Cyclic-sum residual f(a,b,c) + f(b,c,a) + f(c,a,b) over basis triples,
// tagged per tuple. The action being modelled satisfies the corresponding
// identity (t(a,b)(c) + t(b,c)(a) + t(c,a)(b) = 0 by the symmetry of g), so
// an admissible f must vanish here as well.
inline ElementQ f_cyclic_residual(const Rational& k1, const Rational& k2, const Rational& k3,
                                  const MetricSpace& space) {
    const int n = space.dim();
    ElementQ residual(n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                ElementQ va = ElementQ::basis_vector(a, n), vb = ElementQ::basis_vector(b, n),
                         vc = ElementQ::basis_vector(c, n);
                ElementQ sum = f_tensor(k1, k2, k3, va, vb, vc) + f_tensor(k1, k2, k3, vb, vc, va) +
                               f_tensor(k1, k2, k3, vc, va, vb);
                if (!sum.is_zero()) residual += ElementQ::term(Word{a, b, c}, Rational(1), n) * sum;
            }
    return residual;
}

struct FConstraintSolution {
    bool family_confirmed = false;   // (k, -k, 0) satisfies the closure equations
    bool variety_pinned = false;     // no solutions beyond the two certified lines
    bool cyclic_excludes_other = false;  // the second line fails the cyclic identity
    int quadratic_rank = 0;          // rank of the induced quadratic system
    std::string description;
};

// The closure constraint induces homogeneous quadratic equations in
// (k1,k2,k3). Their common zeros form exactly two lines through the origin:
// the commutator family (k,-k,0) and the alternating family (k,k,-k), whose
// f is proportional to the trivector a^b^c. Certification:
//   (a) both lines satisfy every equation (direct substitution), and
//   (b) the equations span the full 4-dimensional space of quadratics
//       vanishing on two distinct lines, so no further zeros exist
//       (through any third direction there passes a split quadric meeting
//       only those two lines).
// The cyclic identity then rules the alternating family out, leaving
// (k,-k,0) as the unique solution with the action's properties.
inline FConstraintSolution solve_f_constraint(const MetricSpace& space) {
    const std::array<std::array<int, 3>, 6> points{{{1, 0, 0},
                                                    {0, 1, 0},
                                                    {0, 0, 1},
                                                    {1, 1, 0},
                                                    {1, 0, 1},
                                                    {0, 1, 1}}};
    std::array<ElementQ, 6> residuals{ElementQ(space.dim()), ElementQ(space.dim()),
                                      ElementQ(space.dim()), ElementQ(space.dim()),
                                      ElementQ(space.dim()), ElementQ(space.dim())};
    for (size_t i = 0; i < points.size(); ++i)
        residuals[i] = check_f_constraint(Rational(points[i][0]), Rational(points[i][1]),
                                          Rational(points[i][2]), space);

    // collect the quadratic form over (k1,k2,k3) for every word
    std::map<Word, std::array<Rational, 6>> forms;  // k1^2,k2^2,k3^2,k1k2,k1k3,k2k3
    for (size_t i = 0; i < residuals.size(); ++i)
        for (const auto& [w, c] : residuals[i].terms()) forms.try_emplace(w);
    for (auto& [w, q] : forms) {
        Rational v1 = residuals[0].coefficient(w), v2 = residuals[1].coefficient(w),
                 v3 = residuals[2].coefficient(w);
        q[0] = v1;
        q[1] = v2;
        q[2] = v3;
        q[3] = residuals[3].coefficient(w) - v1 - v2;
        q[4] = residuals[4].coefficient(w) - v1 - v3;
        q[5] = residuals[5].coefficient(w) - v2 - v3;
    }

    auto to_row = [](const std::vector<Rational>& q) {
        BigInt den(1);
        for (const auto& c : q) den = big_lcm(den, c.den());
        RowSpace::Row row;
        for (size_t j = 0; j < q.size(); ++j)
            if (!q[j].is_zero()) row.emplace_back(j, q[j].num() * (den / q[j].den()));
        return row;
    };

    RowSpace full_span;  // over k1^2,k2^2,k3^2,k1k2,k1k3,k2k3
    for (const auto& [w, q] : forms) {
        RowSpace::Row row = to_row({q.begin(), q.end()});
        if (!row.empty()) full_span.insert(row);
    }

    FConstraintSolution sol;
    sol.quadratic_rank = static_cast<int>(full_span.size());
    bool commutator_line = check_f_constraint(Rational(1), Rational(-1), Rational(0), space).is_zero();
    bool alternating_line = check_f_constraint(Rational(1), Rational(1), Rational(-1), space).is_zero();
    sol.family_confirmed = commutator_line;
    // quadrics vanishing on two distinct lines form a 4-dimensional space;
    // hitting that rank with both lines confirmed pins the variety
    sol.variety_pinned = commutator_line && alternating_line && sol.quadratic_rank == 4;
    sol.cyclic_excludes_other =
        f_cyclic_residual(Rational(1), Rational(-1), Rational(0), space).is_zero() &&
        !f_cyclic_residual(Rational(1), Rational(1), Rational(-1), space).is_zero();

    if (sol.family_confirmed && sol.variety_pinned && sol.cyclic_excludes_other)
        sol.description =
            "k * (1, -1, 0) for arbitrary k; the closure equations also admit k * (1, 1, -1) "
            "(f proportional to the trivector a^b^c), which the cyclic identity excludes";
    else
        sol.description = "unexpected solution variety; see the certification flags";
    return sol;
}

// ---------------------------------------------------------------------------
// Metrics on antisymmetric tensors.

// det( g(a_j, b_k) ) on equal-order blades; 0 on mismatched orders.
inline Rational cauchy_binet(const std::vector<RatVec>& blade1, const std::vector<RatVec>& blade2,
                             const MetricSpace& space) {
    if (blade1.size() != blade2.size()) return Rational(0);
    const int k = static_cast<int>(blade1.size());
    if (k == 0) return Rational(1);
    RatMat gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gram(i, j) = space.pair(blade1[i], blade2[j]);
    return gram.det();
}

// Coordinates of an antisymmetric element of T(E), E 3-dimensional, over the
// basis blades 1, e_a, e_a^e_b (a<b), e_1^e_2^e_3.
struct BladeCoordinates {
    Rational scalar;
    std::array<Rational, 3> vector;
    std::map<std::pair<int, int>, Rational> bivector;  // keys (a,b), a < b
    Rational trivector;
};

inline BladeCoordinates blade_coordinates(const ElementQ& x) {
    if (x.dim() != 3) throw std::invalid_argument("blade_coordinates: expected dimension 3");
    if (x.degree() > 3) throw std::invalid_argument("blade_coordinates: degree exceeds 3");
    BladeCoordinates out;
    out.scalar = x.coefficient(Word{});
    std::array<ElementQ, 4> parts{ElementQ(3), ElementQ(3), ElementQ(3), ElementQ(3)};
    for (const auto& [w, c] : x.terms()) parts[w.size()].add_term(w, c);
    for (int k = 2; k <= 3; ++k)
        if (!parts[k].is_zero() && antisymmetrize(parts[k], k) != parts[k])
            throw std::invalid_argument("blade_coordinates: input is not an antisymmetric tensor");
    for (int a = 1; a <= 3; ++a) out.vector[a - 1] = x.coefficient(Word{a});
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b) {
            Rational c = Rational(2) * x.coefficient(Word{a, b});
            if (!c.is_zero()) out.bivector.emplace(std::make_pair(a, b), c);
        }
    out.trivector = Rational(6) * x.coefficient(Word{1, 2, 3});
    return out;
}

// The metric on antisymmetric tensors of (E, delta): scalars multiply,
// vectors pair through g, bivectors carry (1/3) g_CB C, trivectors carry
// -(1/3) g_CB C, and mixed orders vanish. Values live in Q[C].
inline CasimirPoly lambda_metric(const ElementQ& x, const ElementQ& y, const MetricSpace& space) {
    if (space.dim() != 3) throw std::invalid_argument("lambda_metric: defined over dimension 3");
    BladeCoordinates cx = blade_coordinates(x), cy = blade_coordinates(y);
    auto basis_vec = [&](int a) {
        RatVec v(3, Rational(0));
        v[a - 1] = Rational(1);
        return v;
    };

    CasimirPoly acc(cx.scalar * cy.scalar);
    Rational vec_part(0);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            if (!cx.vector[a - 1].is_zero() && !cy.vector[b - 1].is_zero())
                vec_part += cx.vector[a - 1] * space.g(a, b) * cy.vector[b - 1];
    acc += CasimirPoly(vec_part);

    Rational bivec_part(0);
    for (const auto& [ab, ca] : cx.bivector)
        for (const auto& [cd, cb] : cy.bivector) {
            Rational gcb = cauchy_binet({basis_vec(ab.first), basis_vec(ab.second)},
                                        {basis_vec(cd.first), basis_vec(cd.second)}, space);
            if (!gcb.is_zero()) bivec_part += ca * cb * gcb;
        }
    acc += CasimirPoly::monomial(1, bivec_part * Rational(1, 3));

    if (!cx.trivector.is_zero() && !cy.trivector.is_zero()) {
        Rational gcb = cauchy_binet({basis_vec(1), basis_vec(2), basis_vec(3)},
                                    {basis_vec(1), basis_vec(2), basis_vec(3)}, space);
        acc += CasimirPoly::monomial(1, cx.trivector * cy.trivector * gcb * Rational(-1, 3));
    }
    return acc;
}

// l(B)(x) = reduce(B x - x B) in the given quotient; for a bivector B and a
// degree-1 x this lands on the embedded t-image.
template <class Coeff>
Element<Coeff> bivector_action(const Element<Coeff>& b, const Element<Coeff>& x,
                               const QuotientContext& ctx) {
    if (!b.is_homogeneous(2)) throw std::invalid_argument("bivector_action: B must be a bivector");
    return ctx.reduce(b * x - x * b);
}

}  // namespace spinclif
