#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symadj/minkowski.hpp"
#include "symadj/rng.hpp"

using namespace symadj;
using namespace symadj::minkowski;

namespace {

Rat q(long num, long den = 1) { return Rat(num, den); }

Mat axis_reflection() {
    Mat k(3, 3);
    k(0, 0) = q(-1);
    k(1, 1) = q(1);
    k(2, 2) = q(1);
    return k;
}

Mat swap_p() {
    Mat p(2, 2);
    p(0, 1) = q(1);
    p(1, 0) = q(1);
    return p;
}

// Hyperbolic rotation in the first/last coordinate plane with rational
// cosh = 5/3, sinh = 4/3.
Mat boost_53() {
    Mat b(3, 3);
    b(0, 0) = q(5, 3);
    b(0, 2) = q(4, 3);
    b(1, 1) = q(1);
    b(2, 0) = q(4, 3);
    b(2, 2) = q(5, 3);
    return b;
}

}  // namespace

TEST_CASE("q_form") {
    CHECK(q_form(Vec::unit(3, 2)) == q(1));
    CHECK(q_form(Vec::unit(3, 0)) == q(-1));
    CHECK(q_form(Vec{q(3), q(4), q(5)}) == q(0));
    CHECK(q_form(Vec{q(1), q(2)}) == q(3));  // n = 2 form
}

TEST_CASE("t_map fixed values") {
    CHECK(t_map(Vec{q(0), q(0), q(1)}) == SymMat::identity(2));
    CHECK(t_map(Vec{q(1), q(0), q(0)}) == SymMat::diag({q(1), q(-1)}));

    SymMat null_img(2);
    null_img.set(0, 0, q(8));
    null_img.set(0, 1, q(4));
    null_img.set(1, 1, q(2));
    SymMat img = t_map(Vec{q(3), q(4), q(5)});
    CHECK(img == null_img);
    CHECK(rank(img) == 1);
    CHECK(is_adjacent(img, SymMat::zero(2)));
}

TEST_CASE("t_inv") {
    CHECK(t_inv(SymMat::identity(2)) == Vec{q(0), q(0), q(1)});
    CHECK(t_inv(SymMat::unit(2, 0, 0)) == Vec{q(1, 2), q(0), q(1, 2)});

    Rng rng(301);
    for (int t = 0; t < 25; ++t) {
        Vec x = rng.vec(3);
        CHECK(t_inv(t_map(x)) == x);
        CHECK(det(t_map(x)) == q_form(x));
    }
}

TEST_CASE("null separation vs adjacency") {
    SeparationCheck sc = null_separation_adjacency_check(Vec{q(3), q(4), q(5)}, Vec(3));
    CHECK(sc.null_separated);
    CHECK(sc.adjacent);
    CHECK(sc.consistent);

    Rng rng(303);
    Vec x = rng.vec(3);
    SeparationCheck same = null_separation_adjacency_check(x, x);
    CHECK_FALSE(same.null_separated);
    CHECK_FALSE(same.adjacent);
    CHECK(same.consistent);

    for (int t = 0; t < 40; ++t) {
        Vec a = rng.vec(3), b = rng.vec(3);
        CHECK(det(t_map(a) - t_map(b)) == q_form(a - b));
        CHECK(null_separation_adjacency_check(a, b).consistent);
    }
}

TEST_CASE("is_lorentz") {
    CHECK(is_lorentz(Mat::identity(3)));
    CHECK(is_lorentz(axis_reflection()));
    CHECK_FALSE(is_lorentz(Mat(3, 3, {q(2), q(0), q(0), q(0), q(1), q(0), q(0), q(0), q(1)})));
}

TEST_CASE("restricted lorentz") {
    CHECK(is_restricted_lorentz(LorentzMat(Mat::identity(3))));
    CHECK_FALSE(is_restricted_lorentz(LorentzMat(axis_reflection())));  // det = -1

    Mat b = boost_53();
    REQUIRE(is_lorentz(b));
    CHECK(det(b) == q(1));
    CHECK(is_restricted_lorentz(LorentzMat(b)));

    CHECK_THROWS_AS(LorentzMat(Mat(3, 3)), PreconditionViolation);
}

TEST_CASE("congruence_to_weyl") {
    WeylMap ident = congruence_to_weyl(AffineCongruence(1, Mat::identity(2), SymMat(2)));
    CHECK(ident.alpha == q(1));
    CHECK(ident.l.mat() == Mat::identity(3));
    CHECK(ident.b == Vec(3));

    // The swap congruence realizes the first-axis reflection.
    WeylMap sw = congruence_to_weyl(AffineCongruence(1, swap_p(), SymMat(2)));
    CHECK(sw.l.mat() == axis_reflection());

    Rng rng(307);
    for (int t = 0; t < 20; ++t) {
        Mat p = rng.invertible(2);
        WeylMap w = congruence_to_weyl(AffineCongruence(1, p, SymMat(2)));
        CHECK(w.alpha == det(p).abs());
        for (int s = 0; s < 3; ++s) {
            Vec x = rng.vec(3);
            CHECK(q_form(w.l.mat() * x) == q_form(x));
        }
    }
}

TEST_CASE("lorentz_to_congruence fixed") {
    auto [c_i, p_i] = lorentz_to_congruence(LorentzMat(Mat::identity(3)));
    CHECK(c_i == 1);
    CHECK(p_i == Mat::identity(2));

    auto [c_k, p_k] = lorentz_to_congruence(LorentzMat(axis_reflection()));
    CHECK(c_k == 1);
    CHECK(p_k == swap_p());
}

TEST_CASE("lorentz_to_congruence refuses irrational lifts") {
    // The rational boost has only irrational congruence factors.
    CHECK_THROWS_AS(lorentz_to_congruence(LorentzMat(boost_53())), NonRationalLift);
    try {
        lorentz_to_congruence(LorentzMat(boost_53()));
    } catch (const NonRationalLift& e) {
        CHECK(e.obstruction == q(3));
    }
}

TEST_CASE("weyl maps") {
    Rng rng(311);
    WeylMap ident = weyl_identity();
    Vec x = rng.vec(3);
    CHECK(weyl_apply(ident, x) == x);

    for (int t = 0; t < 15; ++t) {
        Mat p = rng.invertible(2);
        WeylMap lin = congruence_to_weyl(AffineCongruence(rng.chance(1, 2) ? 1 : -1, p, rng.sym(2)));
        WeylMap f(rng.nonzero_rat(), lin.l, rng.vec(3));
        Vec a = rng.vec(3), b = rng.vec(3);
        CHECK(q_form(weyl_apply(f, a) - weyl_apply(f, b)) == f.alpha * f.alpha * q_form(a - b));

        WeylMap round = weyl_compose(weyl_inverse(f), f);
        CHECK(round.alpha == q(1));
        CHECK(round.l.mat() == Mat::identity(3));
        CHECK(round.b == Vec(3));
    }
}
