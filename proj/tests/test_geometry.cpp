#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symadj/geometry.hpp"

using namespace symadj;
using namespace symadj::geometry;

namespace {
Rat q(long num, long den = 1) { return Rat(num, den); }
}

TEST_CASE("line construction") {
    Line l = line(SymMat::zero(2), SymMat::unit(2, 0, 0));
    CHECK(l.base == SymMat::zero(2));
    CHECK(l.direction.coeff == q(1));
    CHECK(l.direction.vector == Vec::unit(2, 0));

    Rng rng(201);
    SymMat a = rng.sym(3);
    Vec u = rng.nonzero_vec(3);
    SymMat step = sym_outer(RankOneTerm(q(2), u));
    Line l2 = line(a, a + step);
    CHECK(sym_outer(l2.direction, 3) == step);

    CHECK_THROWS_AS(line(SymMat::unit(2, 0, 0), SymMat::unit(2, 1, 1)), PreconditionViolation);
}

TEST_CASE("line_point") {
    Line l = line(SymMat::zero(2), SymMat::unit(2, 0, 0));
    CHECK(line_point(l, q(0)) == SymMat::zero(2));
    CHECK(line_point(l, q(1)) == SymMat::unit(2, 0, 0));

    Rng rng(203);
    for (int t = 0; t < 10; ++t) {
        SymMat base = rng.sym(3);
        Line lr = line(base, base + sym_outer(rng.rank_one_term(3)));
        Rat l1 = rng.rat(), l2 = rng.rat();
        if (l1 == l2) continue;
        CHECK(is_adjacent(line_point(lr, l1), line_point(lr, l2)));
    }
}

TEST_CASE("on_line") {
    Line l = line(SymMat::zero(2), SymMat::unit(2, 0, 0));
    CHECK(on_line(l, q(5) * SymMat::unit(2, 0, 0)) == Rat(5));
    CHECK_FALSE(on_line(l, SymMat::unit(2, 1, 1)).has_value());

    Rng rng(207);
    for (int t = 0; t < 15; ++t) {
        SymMat base = rng.sym(2 + t % 3);
        Line lr = line(base, base + sym_outer(rng.rank_one_term(2 + t % 3)));
        Rat lambda = rng.rat();
        CHECK(on_line(lr, line_point(lr, lambda)) == lambda);
    }
}

TEST_CASE("line_distance_profile fixed cases") {
    // Scaling line through a rank-one point, seen from the origin: the zero
    // point of the parametrization is the one nearer point.
    Line scale = line(SymMat::unit(2, 0, 0), q(2) * SymMat::unit(2, 0, 0));
    LineProfile p1 = line_distance_profile(SymMat::zero(2), scale);
    const auto* e1 = std::get_if<ExceptionalProfile>(&p1);
    REQUIRE(e1 != nullptr);
    CHECK(e1->lambda0 == q(-1));
    CHECK(e1->k_point == SymMat::zero(2));
    CHECK(e1->k_at_k == 0);

    // Off-diagonal point vs the coordinate line: constant distance 2.
    SymMat g2(2);
    g2.set(0, 1, q(1));
    Line coord = line(SymMat::zero(2), SymMat::unit(2, 0, 0));
    LineProfile p2 = line_distance_profile(g2, coord);
    const auto* c2 = std::get_if<ConstantProfile>(&p2);
    REQUIRE(c2 != nullptr);
    CHECK(c2->k == 2);

    // Second diagonal unit vs the first coordinate line: exceptional at 0.
    LineProfile p3 = line_distance_profile(SymMat::unit(2, 1, 1), coord);
    const auto* e3 = std::get_if<ExceptionalProfile>(&p3);
    REQUIRE(e3 != nullptr);
    CHECK(e3->lambda0 == q(0));
    CHECK(e3->k_point == SymMat::zero(2));
    CHECK(e3->k_at_k == 1);
}

TEST_CASE("line_distance_profile against sampling") {
    Rng rng(211);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + t % 4;
        SymMat g = rng.sym(n);
        SymMat base = rng.sym(n);
        Line l = line(base, base + sym_outer(rng.rank_one_term(n)));
        LineProfile p = line_distance_profile(g, l);
        for (long s = -3; s <= 3; ++s) {
            int actual = dist(g, line_point(l, q(s)));
            int expected;
            if (const auto* c = std::get_if<ConstantProfile>(&p)) {
                expected = c->k;
            } else {
                const auto& e = std::get<ExceptionalProfile>(p);
                expected = (q(s) == e.lambda0) ? e.k_at_k : e.k_at_k + 1;
            }
            CAPTURE(t);
            CAPTURE(s);
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("adjacency_chain fixed") {
    Chain c = adjacency_chain(SymMat::zero(3), SymMat::identity(3));
    REQUIRE(c.points.size() == 4);
    CHECK(c.points[0] == SymMat::zero(3));
    CHECK(c.points[1] == SymMat::unit(3, 0, 0));
    CHECK(c.points[2] == SymMat::diag({q(1), q(1), q(0)}));
    CHECK(c.points[3] == SymMat::identity(3));

    SymMat a = SymMat::unit(2, 0, 1);
    Chain single = adjacency_chain(a, a);
    CHECK(single.points == std::vector<SymMat>{a});
}

TEST_CASE("adjacency_chain random") {
    Rng rng(213);
    for (int t = 0; t < 20; ++t) {
        SymMat a = rng.sym(4), b = rng.sym(4);
        Chain c = adjacency_chain(a, b);
        CHECK(static_cast<int>(c.points.size()) == dist(a, b) + 1);
        for (size_t i = 0; i + 1 < c.points.size(); ++i)
            CHECK(is_adjacent(c.points[i], c.points[i + 1]));
        for (size_t i = 0; i < c.points.size(); ++i)
            for (size_t j = i + 1; j < c.points.size(); ++j)
                CHECK(dist(c.points[i], c.points[j]) == static_cast<int>(j - i));
    }
}

TEST_CASE("invertible_chain fixed") {
    CrossedChain cc = invertible_chain(SymMat::identity(2), q(2) * SymMat::identity(2));
    REQUIRE(cc.chain.points.size() == 3);
    CHECK(cc.chain.points[1] == SymMat::diag({q(2), q(1)}));
    REQUIRE(cc.crossings.size() == 2);
    CHECK(cc.crossings[0].second == SymMat::diag({q(0), q(1)}));
    CHECK(cc.crossings[1].second == SymMat::diag({q(2), q(0)}));
}

TEST_CASE("invertible_chain antipodal") {
    // Opposite-sign endpoints still admit a chain with nonconstant segment
    // determinants.
    CrossedChain cc = invertible_chain(SymMat::identity(2), q(-1) * SymMat::identity(2));
    CHECK(cc.chain.points.front() == SymMat::identity(2));
    CHECK(cc.chain.points.back() == q(-1) * SymMat::identity(2));
    for (const SymMat& p : cc.chain.points) CHECK(rank(p) == 2);
    for (const auto& [idx, c] : cc.crossings) CHECK(rank(c) == 1);
}

TEST_CASE("invertible_chain reroutes constant-determinant segments") {
    // The direct segment from diag(1,-1) along (1,1)(1,1)^T has constant
    // determinant, so no crossing exists on it; the walk must detour.
    SymMat a = SymMat::diag({q(1), q(-1)});
    SymMat b = a + sym_outer(RankOneTerm(q(1), Vec{q(1), q(1)}));
    REQUIRE(rank(b) == 2);
    REQUIRE(dist(a, b) == 1);
    CrossedChain cc = invertible_chain(a, b, 5);
    CHECK(cc.chain.points.size() > 2);  // longer than dist + 1 by necessity
    CHECK(cc.chain.points.front() == a);
    CHECK(cc.chain.points.back() == b);
    for (const SymMat& p : cc.chain.points) CHECK(rank(p) == 2);
    REQUIRE(cc.crossings.size() == cc.chain.points.size() - 1);
    for (const auto& [idx, c] : cc.crossings) {
        CHECK(rank(c) == 1);
        Line seg = line(cc.chain.points[static_cast<size_t>(idx)],
                        cc.chain.points[static_cast<size_t>(idx) + 1]);
        CHECK(on_line(seg, c).has_value());
    }
}

TEST_CASE("invertible_chain preconditions") {
    SymMat i2 = SymMat::identity(2);
    CHECK_THROWS_AS(invertible_chain(i2, i2), PreconditionViolation);
    CHECK_THROWS_AS(invertible_chain(i2, SymMat::unit(2, 0, 0)), PreconditionViolation);
}

TEST_CASE("invertible_chain random verified") {
    Rng rng(217);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + t % 3;
        SymMat a = rng.sym_of_rank(n, n);
        SymMat b = rng.sym_of_rank(n, n);
        if (a == b) continue;
        CrossedChain cc = invertible_chain(a, b, 900 + static_cast<uint64_t>(t));
        CHECK(cc.chain.points.front() == a);
        CHECK(cc.chain.points.back() == b);
        REQUIRE(cc.crossings.size() == cc.chain.points.size() - 1);
        for (const SymMat& p : cc.chain.points) CHECK(rank(p) == n);
        for (const auto& [idx, c] : cc.crossings) {
            CHECK(rank(c) == n - 1);
            Line seg = line(cc.chain.points[static_cast<size_t>(idx)],
                            cc.chain.points[static_cast<size_t>(idx) + 1]);
            CHECK(on_line(seg, c).has_value());
        }
    }
}
