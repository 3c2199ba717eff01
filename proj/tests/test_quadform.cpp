#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symadj/quadform.hpp"
#include "symadj/rng.hpp"

using namespace symadj;
using namespace symadj::quadform;

namespace {
Rat q(long num, long den = 1) { return Rat(num, den); }
}

TEST_CASE("diagonalize keeps diagonal input") {
    SymMat a = SymMat::diag({q(2), q(-3)});
    CongruenceDiag cd = diagonalize(a);
    CHECK(cd.s == Mat::identity(2));
    CHECK(cd.d == std::vector<Rat>{q(2), q(-3)});
}

TEST_CASE("diagonalize handles a zero diagonal") {
    SymMat a(2);
    a.set(0, 1, q(1));
    CongruenceDiag cd = diagonalize(a);
    // S A S^T = diag(D), S invertible; the zero-pivot congruence makes the
    // first pivot 2*a01.
    CHECK_FALSE(det(cd.s).is_zero());
    CHECK(congruence(a, cd.s) == SymMat::diag(cd.d));
    CHECK(cd.d[0] == q(2));
    Inertia in = inertia(a);
    CHECK(in == Inertia{1, 1, 0});
}

TEST_CASE("diagonalize properties on random input") {
    Rng rng(101);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + t % 4;
        SymMat a = rng.sym(n);
        CongruenceDiag cd = diagonalize(a);
        CAPTURE(t);
        CHECK_FALSE(det(cd.s).is_zero());
        CHECK(congruence(a, cd.s) == SymMat::diag(cd.d));
        int nonzero = 0;
        for (const Rat& v : cd.d)
            if (!v.is_zero()) ++nonzero;
        CHECK(nonzero == rank(a));
    }
}

TEST_CASE("inertia") {
    CHECK(inertia(SymMat::identity(3)) == Inertia{3, 0, 0});
    Rng rng(103);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + t % 4;
        SymMat a = rng.sym(n);
        Mat r = rng.invertible(n);
        CHECK(inertia(congruence(a, r)) == inertia(a));
    }
}

TEST_CASE("rank_one_decompose on fixed inputs") {
    Decomposition d1 = rank_one_decompose(SymMat::unit(2, 0, 0));
    REQUIRE(d1.terms.size() == 1);
    CHECK(d1.terms[0].coeff == q(1));
    CHECK(d1.terms[0].vector == Vec::unit(2, 0));

    Decomposition d2 = rank_one_decompose(SymMat::diag({q(1), q(1), q(0)}));
    REQUIRE(d2.terms.size() == 2);
    CHECK(d2.terms[0].vector == Vec::unit(3, 0));
    CHECK(d2.terms[1].vector == Vec::unit(3, 1));
}

TEST_CASE("rank_one_decompose reassembles with climbing partial ranks") {
    Rng rng(107);
    for (int t = 0; t < 10; ++t) {
        SymMat a = rng.sym_of_rank(5, 3);
        Decomposition dec = rank_one_decompose(a);
        REQUIRE(dec.terms.size() == 3);
        CHECK(reassemble(dec, 5) == a);
        SymMat partial(5);
        for (size_t j = 0; j < dec.terms.size(); ++j) {
            partial = partial + sym_outer(dec.terms[j], 5);
            CHECK(rank(partial) == static_cast<int>(j + 1));
        }
    }
}

TEST_CASE("is_projection") {
    CHECK(is_projection(SymMat::unit(2, 0, 0)));
    SymMat half(2);
    half.set(0, 0, q(1, 2));
    half.set(0, 1, q(1, 2));
    half.set(1, 1, q(1, 2));
    CHECK(is_projection(half));
    CHECK_FALSE(is_projection(q(2) * SymMat::unit(2, 0, 0)));
    CHECK_FALSE(is_projection(SymMat::zero(2)));
}

TEST_CASE("sign_of_rank_one") {
    CHECK(sign_of_rank_one(SymMat::unit(2, 0, 0)) == 1);
    SymMat neg(2);
    neg.set(0, 0, q(-3));
    neg.set(0, 1, q(-3));
    neg.set(1, 1, q(-3));
    CHECK(sign_of_rank_one(neg) == -1);
    CHECK_THROWS_AS(sign_of_rank_one(SymMat::identity(2)), PreconditionViolation);
    CHECK_THROWS_AS(sign_of_rank_one(SymMat::zero(2)), PreconditionViolation);

    Rng rng(109);
    for (int t = 0; t < 20; ++t) {
        RankOneTerm term = rng.rank_one_term(2 + t % 3);
        CHECK(sign_of_rank_one(sym_outer(term)) == term.coeff.sign());
    }
}

TEST_CASE("rank_one_extract round trips") {
    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        RankOneTerm term = rng.rank_one_term(2 + t % 4);
        SymMat m = sym_outer(term);
        CHECK(sym_outer(rank_one_extract(m)) == m);
    }
}

TEST_CASE("compress_q") {
    CHECK(compress_q(SymMat::diag({q(1), q(2), q(0)}), 2) == SymMat::diag({q(1), q(2)}));
    CHECK_THROWS_AS(compress_q(SymMat::unit(3, 2, 2), 2), PreconditionViolation);

    Rng rng(127);
    for (int t = 0; t < 15; ++t) {
        int k = 2 + t % 2;
        int n = k + 1 + t % 2;
        SymMat a = embed_h(rng.sym(k), n);
        SymMat b = embed_h(rng.sym(k), n);
        CHECK(dist(compress_q(a, k), compress_q(b, k)) == dist(a, b));
    }

    SymMat b3 = rng.sym(3);
    CHECK(compress_q(embed_h(b3, 5), 3) == b3);
}
