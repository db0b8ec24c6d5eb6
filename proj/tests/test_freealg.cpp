#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinclif/element.hpp"
#include "spinclif/metric.hpp"
#include "spinclif/tensor_ops.hpp"

using namespace spinclif;

namespace {

ElementQ e(int i) { return ElementQ::basis_vector(i, 3); }

ElementQ random_element(std::mt19937_64& rng, int dim, int max_len, int max_terms) {
    ElementQ x(dim);
    int terms = static_cast<int>(rng() % (max_terms + 1));
    for (int t = 0; t < terms; ++t) {
        int len = static_cast<int>(rng() % (max_len + 1));
        std::vector<uint8_t> w;
        for (int i = 0; i < len; ++i) w.push_back(1 + static_cast<uint8_t>(rng() % dim));
        long num = static_cast<long>(rng() % 11) - 5;
        x.add_term(Word(std::move(w)), Rational(num, 1 + static_cast<long>(rng() % 4)));
    }
    return x;
}

}  // namespace

TEST_CASE("word ids enumerate the graded order") {
    for (int n : {2, 3, 4}) {
        uint64_t limit = word_count_up_to(n, 3);
        for (uint64_t id = 0; id < limit; ++id) {
            Word w = word_from_id(id, n);
            CHECK(word_id(w, n) == id);
        }
        // order check: ids increase along the graded order
        CHECK(word_id(Word{}, n) == 0);
        CHECK(word_id(Word{1}, n) == 1);
        CHECK(word_id(Word{n}, n) == static_cast<uint64_t>(n));
        CHECK(word_id(Word{1, 1}, n) == static_cast<uint64_t>(n) + 1);
    }
}

TEST_CASE("metric space validation") {
    CHECK_THROWS(MetricSpace(2, RatMat(2, 2)));  // degenerate
    RatMat m(2, 2);
    m(0, 1) = Rational(1);
    m(1, 0) = Rational(2);
    CHECK_THROWS(MetricSpace(2, m));  // asymmetric
    MetricSpace s = MetricSpace::signature(1, 3);
    CHECK(s.dim() == 4);
    CHECK(s.g(1, 1) == Rational(1));
    CHECK(s.g(2, 2) == Rational(-1));
    CHECK(s.is_null({Rational(1), Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("concat basics") {
    // basis case: e1 (x) e2 is the word (1,2)
    CHECK(concat(e(1), e(2)) == ElementQ::term(Word{1, 2}, Rational(1), 3));
    // bilinearity
    CHECK(concat(e(1) + e(2), e(1)) ==
          ElementQ::term(Word{1, 1}, Rational(1), 3) + ElementQ::term(Word{2, 1}, Rational(1), 3));
    // unit word is the identity
    ElementQ x = concat(e(1), e(2)) + e(3) * Rational(5);
    CHECK(concat(ElementQ::unit(3), x) == x);
    CHECK(concat(x, ElementQ::unit(3)) == x);
    ElementQ other(2);
    CHECK_THROWS(concat(x, other));
}

TEST_CASE("concat associativity on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        ElementQ a = random_element(rng, 3, 3, 4), b = random_element(rng, 3, 3, 4),
                 c = random_element(rng, 3, 3, 4);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("wedge examples") {
    CHECK(wedge(e(1), e(1)).is_zero());
    ElementQ w12 = wedge(e(1), e(2));
    CHECK(w12 == Rational(1, 2) * ElementQ::term(Word{1, 2}, Rational(1), 3) -
                     Rational(1, 2) * ElementQ::term(Word{2, 1}, Rational(1), 3));
    CHECK(w12.str() == "1/2*e1.e2 - 1/2*e2.e1");
    // k = 3: all six permutations with signs, weight 1/6
    ElementQ w123 = wedge(e(1), e(2), e(3));
    CHECK(w123.term_count() == 6);
    CHECK(w123.coefficient(Word{1, 2, 3}) == Rational(1, 6));
    CHECK(w123.coefficient(Word{2, 1, 3}) == Rational(-1, 6));
    CHECK(w123.coefficient(Word{3, 1, 2}) == Rational(1, 6));
    // blades vanish beyond the dimension
    CHECK(wedge(std::vector<ElementQ>{e(1), e(2), e(3), e(1) + e(2)}).is_zero());
}

TEST_CASE("wedge is alternating and multilinear") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        ElementQ a(3), b(3);
        for (int j = 1; j <= 3; ++j) {
            a += Rational(static_cast<long>(rng() % 7) - 3) * e(j);
            b += Rational(static_cast<long>(rng() % 7) - 3) * e(j);
        }
        CHECK(wedge(a, a).is_zero());
        CHECK(wedge(a, b) == -wedge(b, a));
        CHECK(wedge(std::vector<ElementQ>{a, b, a}).is_zero());
    }
    // scalars act as 0-blades
    ElementQ half = ElementQ::scalar(Rational(1, 2), 3);
    CHECK(wedge(half, e(1)) == Rational(1, 2) * e(1));
    CHECK(wedge(std::vector<ElementQ>{half, e(1), e(2)}) == Rational(1, 2) * wedge(e(1), e(2)));
    CHECK_THROWS(wedge(e(1) * e(2), e(3)));  // degree-2 argument rejected
}

TEST_CASE("wedge blade associativity on basis triples") {
    // antisymmetrizing (a^b) (x) c reproduces a^b^c
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                ElementQ lhs = antisymmetrize(wedge(e(a), e(b)) * e(c), 3);
                CHECK(lhs == wedge(e(a), e(b), e(c)));
            }
}

TEST_CASE("symmetrize examples") {
    ElementQ x = ElementQ::term(Word{1, 2}, Rational(1), 3);
    ElementQ s = symmetrize(x, 2);
    CHECK(s == Rational(1, 2) * ElementQ::term(Word{1, 2}, Rational(1), 3) +
                   Rational(1, 2) * ElementQ::term(Word{2, 1}, Rational(1), 3));
    CHECK(symmetrize(s, 2) == s);  // idempotent on its image
    CHECK(symmetrize(wedge(e(1), e(2)), 2).is_zero());
    CHECK_THROWS(symmetrize(e(1) + x, 2));  // non-homogeneous input
}

TEST_CASE("projectors are idempotent and annihilate each other") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        ElementQ x(3);
        for (int t = 0; t < 4; ++t) {
            std::vector<uint8_t> w{static_cast<uint8_t>(1 + rng() % 3),
                                   static_cast<uint8_t>(1 + rng() % 3)};
            x.add_term(Word(std::move(w)), Rational(static_cast<long>(rng() % 9) - 4));
        }
        ElementQ s = symmetrize(x, 2), a = antisymmetrize(x, 2);
        CHECK(symmetrize(s, 2) == s);
        CHECK(antisymmetrize(a, 2) == a);
        CHECK(symmetrize(a, 2).is_zero());
        CHECK(antisymmetrize(s, 2).is_zero());
        CHECK(s + a == x);  // degree 2: the two projectors resolve the identity
    }
}

TEST_CASE("contract examples") {
    MetricSpace delta = MetricSpace::euclidean(3);
    CHECK(contract(ElementQ::term(Word{1, 1}, Rational(1), 3), 1, 2, delta) == ElementQ::unit(3));
    CHECK(contract(ElementQ::term(Word{1, 2}, Rational(1), 3), 1, 2, delta).is_zero());
    ElementQ trace(3);
    for (int a = 1; a <= 3; ++a) trace.add_term(Word{a, a}, Rational(1));
    CHECK(contract(trace, 1, 2, delta) == ElementQ::scalar(Rational(3), 3));
    CHECK_THROWS(contract(trace, 1, 3, delta));  // slot out of range
    CHECK_THROWS(contract(ElementQ::unit(3), 1, 2, delta));
    // middle slots of a longer word
    ElementQ x = ElementQ::term(Word{2, 1, 1, 3}, Rational(5), 3);
    CHECK(contract(x, 2, 3, delta) == ElementQ::term(Word{2, 3}, Rational(5), 3));
}

TEST_CASE("apply_permutation examples") {
    ElementQ x = ElementQ::term(Word{1, 2}, Rational(1), 3);
    CHECK(apply_permutation(x, {1, 0}) == ElementQ::term(Word{2, 1}, Rational(1), 3));
    CHECK(apply_permutation(x, {0, 1}) == x);
    ElementQ y = ElementQ::term(Word{1, 2, 3}, Rational(1), 3);
    // 3-cycle: slot i takes the letter from slot tau[i]
    CHECK(apply_permutation(y, {1, 2, 0}) == ElementQ::term(Word{2, 3, 1}, Rational(1), 3));
    CHECK_THROWS(apply_permutation(x + y, {0, 1}));
}

TEST_CASE("canonical text form sorts by degree then word") {
    ElementQ x(3);
    x.add_term(Word{}, Rational(2));
    x.add_term(Word{3}, Rational(-1));
    x.add_term(Word{1, 2}, Rational(1, 2));
    x.add_term(Word{2, 1}, Rational(-1, 2));
    CHECK(x.str() == "1/2*e1.e2 - 1/2*e2.e1 - e3 + 2");
    CHECK(ElementQ(3).str() == "0");
}
