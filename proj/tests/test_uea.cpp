#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinclif/monopole.hpp"
#include "spinclif/pbw.hpp"
#include "spinclif/spinrep.hpp"

using namespace spinclif;

namespace {

PBWElement J(int a) { return PBWElement::generator(a); }

ElementQ jword(std::initializer_list<int> idx) {
    std::vector<uint8_t> w;
    for (int i : idx) w.push_back(static_cast<uint8_t>(i));
    return ElementQ::term(Word(std::move(w)), Rational(1), 3);
}

ElementQ random_jelement(std::mt19937_64& rng, int max_len, int max_terms) {
    ElementQ x(3);
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        int len = static_cast<int>(rng() % (max_len + 1));
        std::vector<uint8_t> w;
        for (int i = 0; i < len; ++i) w.push_back(1 + static_cast<uint8_t>(rng() % 3));
        x.add_term(Word(std::move(w)), Rational(static_cast<long>(rng() % 9) - 4));
    }
    return x;
}

double matdiff(const CMat& a, const CMat& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("pbw normal form: defining rewrites") {
    // J2 J1 = J1 J2 - J3, checked against the spin-1/2 and spin-1 matrices
    PBWElement lhs = pbw_normal_form(jword({2, 1}));
    CHECK(lhs == J(1) * J(2) - J(3));
    CHECK(lhs.str() == "J1.J2 - J3");
    for (const char* s : {"1/2", "1"}) {
        SpinRep rep = spin_matrices(HalfInt::parse(s));
        CMat direct = rep.j[1] * rep.j[0];
        CHECK(matdiff(evaluate(lhs, rep), direct) < 1e-12);
    }
    // already ordered words are untouched
    CHECK(pbw_normal_form(jword({1, 2})) == J(1) * J(2));
    // J3 J2 J1 straightens to a degree-<=3 ordered polynomial
    PBWElement long_word = pbw_normal_form(jword({3, 2, 1}));
    CHECK(long_word.degree() == 3);
    for (const auto& [m, c] : long_word.terms())
        CHECK(m.degree() <= 3);
    SpinRep rep1 = spin_matrices(HalfInt::parse("1"));
    CHECK(matdiff(evaluate(long_word, rep1), rep1.j[2] * rep1.j[1] * rep1.j[0]) < 1e-12);
}

TEST_CASE("pbw rewriting is confluent under randomized descent choices") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 120; ++i) {
        ElementQ x = random_jelement(rng, 5, 4);
        PBWElement canonical = pbw_normal_form(x);
        std::mt19937_64 chooser_rng(rng());
        PBWElement randomized = pbw_normal_form(
            x, [&](size_t n) { return static_cast<size_t>(chooser_rng() % n); });
        CHECK(canonical == randomized);
    }
}

TEST_CASE("pbw product and left multiplication") {
    CHECK(left_mult(PBWElement::one(), J(2) * J(3)) == J(2) * J(3));
    CHECK(left_mult(J(1), J(1)) == pbw_normal_form(jword({1, 1})));
    CHECK(left_mult(J(2), J(1)) == J(1) * J(2) - J(3));
    // evaluation respects normal form on random elements
    std::mt19937_64 rng(32);
    SpinRep rep = spin_matrices(HalfInt::parse("3/2"));
    for (int i = 0; i < 60; ++i) {
        ElementQ x = random_jelement(rng, 4, 4);
        CHECK(matdiff(evaluate(pbw_normal_form(x), rep), evaluate(x, rep)) < 1e-10);
    }
}

TEST_CASE("adjoint action cases") {
    // scalar branch multiplies
    ElementQ two = ElementQ::scalar(Rational(2), 3);
    CHECK(ad(two, J(1)) == Rational(2) * J(1));
    // degree-1 branch commutates: ad(J1)(J2) = J3
    CHECK(ad(jword({1}), J(2)) == J(3));
    CHECK(ad(jword({1}), J(3)) == -J(2));
    // tensor branch composes: ad(J1 (x) J2) = ad(J1) ad(J2)
    PBWElement target = J(3) * J(3);
    CHECK(ad(jword({1, 2}), target) == ad(jword({1}), ad(jword({2}), target)));
    // matrix oracle for the bracket
    SpinRep rep = spin_matrices(HalfInt::parse("1"));
    CHECK(matdiff(evaluate(ad(jword({1}), J(2)), rep),
                  commutator(rep.j[0], rep.j[1])) < 1e-12);
}

TEST_CASE("casimir element and centrality") {
    PBWElement c = casimir();
    CHECK(c == J(1) * J(1) + J(2) * J(2) + J(3) * J(3));
    // ad(C) = sum_b ad(Jb) ad(Jb) acts as -k(k+1) = -2 on the generators
    // (this is what the order-1 eigen relation ad(C + 2) mu_1 = 0 needs)
    for (int a = 1; a <= 3; ++a) {
        PBWElement via_sum;
        for (int b = 1; b <= 3; ++b) via_sum += ad(jword({b}), ad(jword({b}), J(a)));
        CHECK(via_sum == Rational(-2) * J(a));
        CHECK(ad_casimir(J(a)) == Rational(-2) * J(a));
        CHECK((ad(c, J(a)) + Rational(2) * J(a)).is_zero());
    }
    // centrality proper: C commutes with everything as a product
    for (int a = 1; a <= 3; ++a) CHECK(c * J(a) == J(a) * c);
    PBWElement x = J(2) * J(1) * J(3);
    CHECK(c * x == x * c);
    CHECK(ad_casimir(c).is_zero());  // C itself is a monopole-sector element
    CHECK(ad(c, c).is_zero());
}

TEST_CASE("ad of a generator is a derivation") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 60; ++i) {
        PBWElement a = pbw_normal_form(random_jelement(rng, 2, 3));
        PBWElement b = pbw_normal_form(random_jelement(rng, 2, 3));
        for (int g = 1; g <= 3; ++g) {
            PBWElement lhs = ad(jword({g}), a * b);
            PBWElement rhs = ad(jword({g}), a) * b + a * ad(jword({g}), b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("multipole base cases and order two") {
    CHECK(multipole(0, {}) == PBWElement::one());
    for (int a = 1; a <= 3; ++a) CHECK(multipole(1, {a}) == J(a));

    // independent expansion of the k=1 recursion step:
    // T_12 = ad(C) ad(C+2) (J1 (x) J2) / 24
    ElementQ c_plus_2 = casimir_free();
    c_plus_2.add_term(Word{}, Rational(2));
    PBWElement step = ad(casimir_free(), ad(c_plus_2, left_mult(J(1), J(2))));
    PBWElement oracle = Rational(1, 24) * step;
    CHECK(multipole(2, {1, 2}) == oracle);
    // frozen value: the symmetrized product (no trace part off the diagonal)
    CHECK(multipole(2, {1, 2}) == Rational(1, 2) * (J(1) * J(2) + J(2) * J(1)));
    CHECK(multipole(2, {1, 2}).str() == "J1.J2 - 1/2*J3");
    // diagonal carries the trace correction
    CHECK(multipole(2, {1, 1}) == J(1) * J(1) - Rational(1, 3) * casimir());

    // numeric cross-check against the representation-side recursion
    for (const char* s : {"1", "3/2"}) {
        SpinRep rep = spin_matrices(HalfInt::parse(s));
        for (const auto& w : all_words(3, 2))
            CHECK(matdiff(evaluate(multipole(2, w), rep), multipole_matrix(2, w, rep)) < 1e-12);
    }
}

TEST_CASE("multipole properties up to order four") {
    for (int k = 0; k <= 4; ++k) {
        std::map<std::vector<int>, PBWElement> mu;
        for (const auto& w : all_words(3, k)) mu.emplace(w, multipole(k, w));
        for (const auto& [w, m] : mu) {
            // eigen property
            CHECK((ad_casimir(m) + Rational(k * (k + 1)) * m).is_zero());
            // total symmetry under adjacent swaps (these generate S_k)
            for (int i = 0; i + 1 < k; ++i) {
                std::vector<int> sw = w;
                std::swap(sw[i], sw[i + 1]);
                CHECK(mu.at(sw) == m);
            }
        }
        // contractionless
        if (k >= 2)
            for (int m1 = 0; m1 < k; ++m1)
                for (int m2 = m1 + 1; m2 < k; ++m2)
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
                        CHECK(sum.is_zero());
                    }
    }
}

TEST_CASE("multipole input validation") {
    CHECK_THROWS(multipole(2, {1}));
    CHECK_THROWS(multipole(1, {4}));
}

TEST_CASE("minimal polynomial examples") {
    std::vector<PBWElement> jspan{J(1), J(2), J(3)};
    // zero operator on a nonzero space
    CHECK(minimal_polynomial([](const PBWElement&) { return PBWElement::zero(); }, jspan) ==
          CasimirPoly::symbol());
    // identity operator
    CHECK(minimal_polynomial([](const PBWElement& x) { return x; }, jspan) ==
          CasimirPoly::symbol() - CasimirPoly(Rational(1)));
    // ad_C on the generator span: x + 2
    CHECK(minimal_polynomial([](const PBWElement& x) { return ad_casimir(x); }, jspan) ==
          CasimirPoly::symbol() + CasimirPoly(Rational(2)));
    // dependent spanning sets are fine
    std::vector<PBWElement> redundant{J(1), J(1) + J(2), J(2), J(3)};
    CHECK(minimal_polynomial([](const PBWElement& x) { return ad_casimir(x); }, redundant) ==
          CasimirPoly::symbol() + CasimirPoly(Rational(2)));
    // non-stable spaces are rejected
    CHECK_THROWS_AS(minimal_polynomial([](const PBWElement& x) { return J(1) * x; }, {J(1)}),
                    std::invalid_argument);
}

TEST_CASE("monopole part examples") {
    CHECK(monopole_part(PBWElement::one()) == CasimirPoly(Rational(1)));
    for (int a = 1; a <= 3; ++a) CHECK(monopole_part(J(a)).is_zero());
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            CHECK(monopole_part(J(p) * J(q)) ==
                  CasimirPoly::monomial(1, Rational(p == q ? 1 : 0, 3)));
    // Mon is Q[C]-linear on the monopole sector: Mon(C^2) = C^2
    PBWElement c2 = casimir() * casimir();
    CHECK(monopole_part(c2) == CasimirPoly::monomial(2, Rational(1)));
    CHECK(monopole_part(PBWElement::zero()).is_zero());
    CHECK_THROWS_AS(monopole_part(J(1) * J(2), 1), std::invalid_argument);
}

TEST_CASE("monopole part kills brackets") {
    // the monopole component of ad(Ja, A) vanishes for every monomial A
    for (int d0 = 0; d0 <= 3; ++d0)
        for (int d1 = 0; d0 + d1 <= 3; ++d1)
            for (int d2 = 0; d0 + d1 + d2 <= 3; ++d2) {
                PBWMonomial m;
                m.e = {static_cast<uint16_t>(d0), static_cast<uint16_t>(d1),
                       static_cast<uint16_t>(d2)};
                PBWElement a;
                a.add_term(m, Rational(1));
                for (int g = 1; g <= 3; ++g) {
                    PBWElement br = ad(ElementQ::term(Word{g}, Rational(1), 3), a);
                    if (!br.is_zero()) CHECK(monopole_part(br).is_zero());
                }
            }
}

TEST_CASE("pbw canonical text form") {
    CHECK((J(1) * J(2) - J(3)).str() == "J1.J2 - J3");
    CHECK(PBWElement::zero().str() == "0");
    CHECK((Rational(-1, 2) * J(3)).str() == "-1/2*J3");
    CHECK(casimir().str() == "J1.J1 + J2.J2 + J3.J3");
}
