#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinclif/spinrep.hpp"

using namespace spinclif;

namespace {

double comm_residual(const SpinRep& rep) {
    double worst = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            CMat lhs = commutator(rep.j[a - 1], rep.j[b - 1]);
            for (int c = 1; c <= 3; ++c)
                if (epsilon(a, b, c)) lhs -= Complex(epsilon(a, b, c), 0) * rep.j[c - 1];
            worst = std::max(worst, lhs.max_abs());
        }
    return worst;
}

double casimir_residual(const SpinRep& rep) {
    CMat cas(rep.dim());
    for (int a = 0; a < 3; ++a) cas += rep.j[a] * rep.j[a];
    cas += Complex(rep.s.s_times_s_plus_one().to_double(), 0) * CMat::identity(rep.dim());
    return cas.max_abs();
}

}  // namespace

TEST_CASE("spin matrices: trivial representation") {
    SpinRep rep = spin_matrices(HalfInt::parse("0"));
    CHECK(rep.dim() == 1);
    for (const auto& j : rep.j) CHECK(j.max_abs() == 0.0);
}

TEST_CASE("spin matrices: spin 1/2 is the Pauli construction") {
    SpinRep rep = spin_matrices(HalfInt::parse("1/2"));
    REQUIRE(rep.dim() == 2);
    // J_a = -(i/2) sigma_a entrywise
    CHECK(std::abs(rep.j[0](0, 1) - Complex(0, -0.5)) < 1e-15);
    CHECK(std::abs(rep.j[0](1, 0) - Complex(0, -0.5)) < 1e-15);
    CHECK(std::abs(rep.j[1](0, 1) - Complex(-0.5, 0)) < 1e-15);
    CHECK(std::abs(rep.j[1](1, 0) - Complex(0.5, 0)) < 1e-15);
    CHECK(std::abs(rep.j[2](0, 0) - Complex(0, -0.5)) < 1e-15);
    CHECK(std::abs(rep.j[2](1, 1) - Complex(0, 0.5)) < 1e-15);
    CHECK(comm_residual(rep) < 1e-12);
    CHECK(casimir_residual(rep) < 1e-12);
}

TEST_CASE("spin matrices: construction invariants for all desk spins") {
    for (const char* s : {"0", "1/2", "1", "3/2", "2", "5/2", "3"}) {
        SpinRep rep = spin_matrices(HalfInt::parse(s));
        CHECK(comm_residual(rep) < 1e-12);
        CHECK(casimir_residual(rep) < 1e-12);
    }
    // spin 1 explicitly: sum Ja^2 = -2 id
    SpinRep rep1 = spin_matrices(HalfInt::parse("1"));
    CMat cas(3);
    for (int a = 0; a < 3; ++a) cas += rep1.j[a] * rep1.j[a];
    CHECK((cas + Complex(2, 0) * CMat::identity(3)).max_abs() < 1e-12);
}

TEST_CASE("evaluation is an algebra morphism") {
    SpinRep rep = spin_matrices(HalfInt::parse("1/2"));
    CHECK((evaluate(ElementQ::unit(3), rep) - CMat::identity(2)).max_abs() == 0.0);
    CHECK((evaluate(casimir(), rep) + Complex(0.75, 0) * CMat::identity(2)).max_abs() < 1e-12);
    // the defining bracket evaluates to zero for every spin
    for (const char* s : {"1/2", "1", "5/2"}) {
        SpinRep r = spin_matrices(HalfInt::parse(s));
        ElementQ x(3);
        x.add_term(Word{2, 1}, Rational(1));
        x.add_term(Word{1, 2}, Rational(-1));
        x.add_term(Word{3}, Rational(1));
        CHECK(evaluate(x, r).max_abs() < 1e-12);
    }
}

TEST_CASE("evaluation respects pbw normal form on random elements") {
    std::mt19937_64 rng(55);
    SpinRep rep = spin_matrices(HalfInt::parse("2"));
    for (int i = 0; i < 50; ++i) {
        ElementQ x(3);
        for (int t = 0; t < 4; ++t) {
            std::vector<uint8_t> w;
            int len = static_cast<int>(rng() % 5);
            for (int j = 0; j < len; ++j) w.push_back(1 + static_cast<uint8_t>(rng() % 3));
            x.add_term(Word(std::move(w)), Rational(static_cast<long>(rng() % 9) - 4));
        }
        CHECK((evaluate(pbw_normal_form(x), rep) - evaluate(x, rep)).max_abs() < 1e-10);
    }
}

TEST_CASE("spin ideal verification per spin") {
    // spin 0: the dipole images vanish (trivial representation)
    SpinIdealReport r0 = verify_spin_ideal(HalfInt::parse("0"));
    CHECK(r0.pass);
    CHECK(r0.max_top_residual < 1e-15);
    // spin 1/2: all nine quadrupole images vanish, dipoles survive
    SpinIdealReport rh = verify_spin_ideal(HalfInt::parse("1/2"));
    CHECK(rh.pass);
    CHECK(rh.max_top_residual < 1e-12);
    CHECK(rh.min_lower_norm > 1e-6);
    // spin 1: octupoles vanish, quadrupoles do not
    SpinIdealReport r1 = verify_spin_ideal(HalfInt::parse("1"));
    CHECK(r1.pass);
    SpinRep rep1 = spin_matrices(HalfInt::parse("1"));
    double quad = 0;
    for (const auto& w : all_words(3, 2))
        quad = std::max(quad, multipole_matrix(2, w, rep1).max_abs());
    CHECK(quad > 1e-6);
}

TEST_CASE("multipole span ranks") {
    CHECK(multipole_span_rank(HalfInt::parse("0")) == 1);
    CHECK(multipole_span_rank(HalfInt::parse("1/2")) == 4);
    CHECK(multipole_span_rank(HalfInt::parse("1")) == 9);
    CHECK(multipole_span_rank(HalfInt::parse("3/2")) == 16);
}

TEST_CASE("numeric and symbolic multipoles agree") {
    for (const char* s : {"1/2", "1", "3/2"}) {
        SpinRep rep = spin_matrices(HalfInt::parse(s));
        for (int k = 0; k <= 3; ++k)
            for (const auto& w : all_words(3, k))
                CHECK((evaluate(multipole(k, w), rep) - multipole_matrix(k, w, rep)).max_abs() <
                      1e-12);
    }
}
