#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "spinclif/quotient.hpp"
#include "spinclif/spinrep.hpp"

using namespace spinclif;

namespace {

ElementQ e(int i) { return ElementQ::basis_vector(i, 3); }
ElementQ bw(int a, int b) { return wedge(e(a), e(b)); }

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("clifford context dimensions match the blade count") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext ctx(space, relations::clifford(space), 3, 2);
    // independent oracle: cumulative binomial counts, total 2^3
    std::vector<int> expected;
    int acc = 0;
    for (int d = 0; d <= 3; ++d) {
        acc += static_cast<int>(binomial(3, d));
        expected.push_back(acc);
    }
    CHECK(ctx.dims() == expected);
    CHECK(ctx.dims().back() == 8);
    // stabilized: one degree further changes nothing
    QuotientContext deeper(space, relations::clifford(space), 4, 2);
    CHECK(deeper.dims().back() == 8);
}

TEST_CASE("symmetric context dimensions match monomial counts") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext ctx(space, relations::symmetric(space), 3, 2);
    std::vector<int> expected;
    int acc = 0;
    for (int d = 0; d <= 3; ++d) {
        acc += static_cast<int>(binomial(d + 2, 2));
        expected.push_back(acc);
    }
    CHECK(ctx.dims() == expected);
    CHECK(ctx.dims() == std::vector<int>{1, 4, 10, 20});
}

TEST_CASE("free context counts all words") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext ctx(space, relations::free_algebra(), 2, 2);
    CHECK(ctx.dims() == std::vector<int>{1, 4, 13});
    ElementQ x = e(1) * e(2) - e(2) * e(1);
    CHECK(ctx.reduce(x) == x);  // nothing reduces in the free truncation
}

TEST_CASE("clifford reduction examples") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext ctx(space, relations::clifford(space), 4, 2);
    CHECK(ctx.reduce(e(1) * e(1)) == ElementQ::unit(3));
    CHECK(ctx.reduce(e(1) * e(2) + e(2) * e(1)).is_zero());
    // reduce is linear and idempotent
    ElementQ x = e(1) * e(2) * e(1) + Rational(2) * e(3);
    ElementQ r = ctx.reduce(x);
    CHECK(ctx.reduce(r) == r);
    CHECK(ctx.reduce(x + x) == r + r);
    // every relation generator reduces to zero
    for (const auto& g : relations::clifford(space).generators(6))
        CHECK(ctx.reduce(g).is_zero());
}

TEST_CASE("weak clifford reduction examples") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext ctx(space, relations::weak_clifford(space), 4, 2);
    // bivector-vector commutator with no metric overlap dies
    CHECK(ctx.reduce(bw(1, 2) * e(3) - e(3) * bw(1, 2)).is_zero());
    // the overlapping case survives as a vector
    CHECK(ctx.reduce(bw(1, 2) * e(1) - e(1) * bw(1, 2)) == e(2));
    for (const auto& g : relations::weak_clifford(space).generators(6))
        CHECK(ctx.reduce(g).is_zero());
}

TEST_CASE("reduce rejects out-of-range degrees and spaces") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext ctx(space, relations::clifford(space), 3, 2);
    ElementQ deep = e(1) * e(1) * e(2) * e(2);
    CHECK_THROWS_AS(ctx.reduce(deep), std::invalid_argument);
    ElementQ wrong(2);
    CHECK_THROWS_AS(ctx.reduce(wrong), std::invalid_argument);
}

TEST_CASE("quotient basis words are the non-pivot words") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext ctx(space, relations::clifford(space), 3, 2);
    auto basis = ctx.quotient_basis();
    CHECK(static_cast<int>(basis.size()) == ctx.dims().back());
    // the ascending words survive as representatives
    CHECK(basis[0] == Word{});
    CHECK(std::find(basis.begin(), basis.end(), Word{1, 2}) != basis.end());
    CHECK(std::find(basis.begin(), basis.end(), Word{2, 1}) == basis.end());
    CHECK(std::find(basis.begin(), basis.end(), Word{1, 2, 3}) != basis.end());
}

TEST_CASE("spin ideal relation families") {
    auto fam_half = relations::spin_ideal(HalfInt::parse("1/2"));
    auto gens_half = fam_half.generators(6);
    CHECK(gens_half.size() == 9);
    // vector-word degree 4; PBW straightening mixes in lower even degrees
    for (const auto& g : gens_half) CHECK(g.degree() == 4);
    auto fam_one = relations::spin_ideal(HalfInt::parse("1"));
    auto gens_one = fam_one.generators(8);
    CHECK(gens_one.size() == 27);
    for (const auto& g : gens_one) CHECK(g.degree() == 6);
    // below their degree the families contribute nothing
    CHECK(fam_half.generators(3).empty());
    // the spin-0 construction must use the symmetric relations instead
    CHECK_THROWS_AS(relations::spin_ideal(HalfInt::parse("0")), std::invalid_argument);
}

TEST_CASE("stabilization audit") {
    auto space = MetricSpace::euclidean(3);
    StabilizationAudit ok = audit_stabilization(space, relations::clifford(space), 3, 2);
    CHECK(ok.stabilized);
    CHECK(ok.dims == ok.dims_deeper);
    // headroom 0 on the clifford relations already stabilizes at this size
    StabilizationAudit tight = audit_stabilization(space, relations::clifford(space), 3, 0);
    CHECK(tight.stabilized);
}

TEST_CASE("spin-s enveloping presentation reaches (2s+1)^2") {
    auto space = MetricSpace::euclidean(3);
    for (const char* ss : {"1/2", "1"}) {
        HalfInt s = HalfInt::parse(ss);
        QuotientContext ctx(space, relations::spin_enveloping(s), s.twice() + 3, 2);
        int expected = s.dim() * s.dim();
        CHECK(ctx.dims().back() == expected);
        // oracle: the rank of the multipole images in the spin-s representation
        CHECK(multipole_span_rank(s) == expected);
        // dims stabilize: the last two filtration levels agree
        auto dims = ctx.dims();
        CHECK(dims[dims.size() - 1] == dims[dims.size() - 2]);
    }
}

TEST_CASE("bivector subalgebras have the spin-1/2 dimension") {
    auto space = MetricSpace::euclidean(3);
    {
        QuotientContext ctx(space, relations::clifford(space), 6, 2);
        std::vector<ElementQ> gens;
        for (int p = 1; p <= 3; ++p) gens.push_back(generator_bivector(p, GeneratorConvention::strong));
        CHECK(unital_subalgebra_dimension(ctx, gens) == 4);
    }
    {
        QuotientContext ctx(space, relations::spin_weak(HalfInt::parse("1/2")), 6, 2);
        std::vector<ElementQ> gens;
        for (int p = 1; p <= 3; ++p) gens.push_back(generator_bivector(p));
        CHECK(unital_subalgebra_dimension(ctx, gens) == 4);
    }
}

TEST_CASE("spin-1/2 weak context values") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext ctx(space, relations::spin_weak(HalfInt::parse("1/2")), 6, 2);
    ElementQ cas(3);
    for (int p = 1; p <= 3; ++p) {
        ElementQ jp = generator_bivector(p);
        cas += jp * jp;
    }
    CHECK(ctx.reduce(cas) == ElementQ::scalar(Rational(-3, 4), 3));
    // the ideal members reduce to zero
    for (const auto& g : relations::spin_ideal(HalfInt::parse("1/2")).generators(6))
        CHECK(ctx.reduce(g).is_zero());
    // reduction over Q[C] coefficients works unchanged
    ElementC x = promote(cas) * CasimirPoly::symbol();
    CHECK(ctx.reduce(x) ==
          ElementC::scalar(CasimirPoly::monomial(1, Rational(-3, 4)), 3));
}

TEST_CASE("generator transforms round-trip") {
    BivectorTransform weak;
    for (int p = 1; p <= 3; ++p) {
        ElementQ biv = weak.generator(p);
        ElementQ back = weak.to_generators(biv);
        CHECK(back == ElementQ::basis_vector(p, 3));
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b) {
            ElementQ blade = bw(a, b);
            // e_a ^ e_b = sum_p eps_abp Jp, then back through the generator map
            ElementQ gens = bivector_to_generators(blade);
            ElementQ again = embed_generators(gens);
            CHECK(again == blade);
        }
    CHECK_THROWS(bivector_to_generators(e(1) * e(2)));  // not antisymmetric
}

TEST_CASE("deterministic rebuilds") {
    auto space = MetricSpace::euclidean(3);
    QuotientContext a(space, relations::weak_clifford(space), 4, 2);
    QuotientContext b(space, relations::weak_clifford(space), 4, 2);
    CHECK(a.dims() == b.dims());
    CHECK(a.ideal_rank() == b.ideal_rank());
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        ElementQ x(3);
        for (int t = 0; t < 5; ++t) {
            std::vector<uint8_t> w;
            int len = static_cast<int>(rng() % 5);
            for (int j = 0; j < len; ++j) w.push_back(1 + static_cast<uint8_t>(rng() % 3));
            x.add_term(Word(std::move(w)), Rational(static_cast<long>(rng() % 9) - 4));
        }
        CHECK(a.reduce(x) == b.reduce(x));
    }
}
