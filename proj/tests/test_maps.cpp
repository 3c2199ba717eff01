#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symadj/maps.hpp"

using namespace symadj;
using namespace symadj::maps;

namespace {

Rat q(long num, long den = 1) { return Rat(num, den); }

SymMat truncate_to_corner(const SymMat& a) {
    SymMat out(a.dim());
    out.set(0, 0, a(0, 0));
    return out;
}

}  // namespace

TEST_CASE("apply standard") {
    StandardMapSpec ident(1, Mat::identity(2));
    Rng rng(401);
    SymMat a = rng.sym(2);
    CHECK(maps::apply(MapSpec(ident), a) == a);

    StandardMapSpec neg(-1, Mat(2, 2, {q(1), q(0), q(1), q(1)}));
    SymMat ones(2);
    ones.set(0, 0, q(1));
    ones.set(0, 1, q(1));
    ones.set(1, 1, q(1));
    CHECK(maps::apply(MapSpec(neg), SymMat::unit(2, 0, 0)) == q(-1) * ones);
}

TEST_CASE("apply degenerate") {
    DegenerateMapSpec dg(SymMat::unit(2, 0, 0), TraceFn{}, 2);
    CHECK(maps::apply(MapSpec(dg), SymMat::diag({q(2), q(3)})) == q(5) * SymMat::unit(2, 0, 0));

    // Scale is folded into the functional during normalization.
    DegenerateMapSpec scaled(q(3) * SymMat::unit(2, 0, 0), TraceFn{}, 2);
    CHECK(scaled.b == SymMat::unit(2, 0, 0));
    CHECK(maps::apply(MapSpec(scaled), SymMat::diag({q(2), q(3)})) == q(15) * SymMat::unit(2, 0, 0));
}

TEST_CASE("generators") {
    for (uint64_t s = 0; s < 10; ++s) {
        StandardMapSpec st = gen_random_standard(2, 2, s);
        CHECK(rank(st.r_block) == 2);
        CHECK(maps::apply(MapSpec(st), SymMat::zero(2)) == SymMat::zero(2));

        DegenerateMapSpec dg = gen_random_degenerate(3, 2, s);
        CHECK(rank(dg.b) == 1);
        Rng rng(s);
        SymMat x = rng.sym(3);
        SymMat y = x + sym_outer(rng.rank_one_term(3));
        SymMat fx = maps::apply(MapSpec(dg), x), fy = maps::apply(MapSpec(dg), y);
        CHECK_FALSE(fx == fy);  // adjacent inputs map to distinct multiples
        CHECK(dist(fx, fy) == 1);
    }
    CHECK_THROWS_AS(gen_random_standard(3, 2, 0), PreconditionViolation);
}

TEST_CASE("check_adjacency_preserving") {
    Rng rng(407);
    StandardMapSpec st = gen_random_standard(3, 4, 11);
    MapOracle st_oracle(3, 4, MapSpec(st));
    std::vector<std::pair<SymMat, SymMat>> pairs;
    for (int i = 0; i < 50; ++i) {
        SymMat x = rng.sym(3);
        pairs.emplace_back(x, x + sym_outer(rng.rank_one_term(3)));
    }
    CheckReport rep = check_adjacency_preserving(st_oracle, pairs);
    CHECK(rep.ok());
    CHECK(rep.pairs_checked == 50);

    DegenerateMapSpec dg(SymMat::unit(2, 0, 0), TraceFn{}, 3);
    CheckReport drep = check_adjacency_preserving(MapOracle(3, 2, MapSpec(dg)), pairs);
    CHECK(drep.ok());

    // Entry truncation collapses (E22, 0).
    MapOracle trunc = MapOracle::tabulate(2, 2, truncate_to_corner,
                                          {SymMat::unit(2, 1, 1), SymMat::zero(2)});
    std::vector<std::pair<SymMat, SymMat>> bad = {{SymMat::unit(2, 1, 1), SymMat::zero(2)}};
    CheckReport trep = check_adjacency_preserving(trunc, bad);
    CHECK(trep.violations == 1);
    REQUIRE(trep.witness.has_value());
    CHECK(trep.witness->first == SymMat::unit(2, 1, 1));
}

TEST_CASE("check_nonexpansive") {
    Rng rng(409);
    StandardMapSpec st = gen_random_standard(3, 3, 13);
    DegenerateMapSpec dg = gen_random_degenerate(3, 3, 13);
    std::vector<std::pair<SymMat, SymMat>> pairs;
    for (int i = 0; i < 30; ++i) pairs.emplace_back(rng.sym(3), rng.sym(3));
    MapOracle sto(3, 3, MapSpec(st));
    MapOracle dgo(3, 3, MapSpec(dg));
    CHECK(check_nonexpansive(sto, pairs).ok());
    CHECK(check_nonexpansive(dgo, pairs).ok());
    for (const auto& [x, y] : pairs) {
        CHECK(dist(*sto.eval(x), *sto.eval(y)) == dist(x, y));  // rank-n block: equality
        CHECK(dist(*dgo.eval(x), *dgo.eval(y)) <= 1);           // multiples of one B
    }
}

TEST_CASE("classify identity") {
    MapOracle ident(2, 2, MapSpec(StandardMapSpec(1, Mat::identity(2))));
    ClassifyResult res = classify(ident);
    const auto* sv = std::get_if<StandardVerdict>(&res);
    REQUIRE(sv != nullptr);
    CHECK(sv->c == 1);
    CHECK(sv->r_block == Mat::identity(2));
}

TEST_CASE("classify trace map") {
    DegenerateMapSpec dg(SymMat::unit(2, 0, 0), TraceFn{}, 3);
    ClassifyResult res = classify(MapOracle(3, 2, MapSpec(dg)));
    const auto* dv = std::get_if<DegenerateVerdict>(&res);
    REQUIRE(dv != nullptr);
    CHECK(dv->b == SymMat::unit(2, 0, 0));
    for (const auto& [probe, coeff] : dv->samples) CHECK(coeff == trace(probe));
}

TEST_CASE("classify squaring map") {
    MapOracle sq = MapOracle::tabulate(
        2, 2, [](const SymMat& a) { return SymMat(a.mat() * a.mat()); },
        canonical_probes(2, kDefaultProbeSeed));
    ClassifyResult res = classify(sq);
    const auto* nv = std::get_if<NotAdjacencyPreserving>(&res);
    REQUIRE(nv != nullptr);
    CHECK(is_adjacent(nv->x, nv->y));
    CHECK(dist(nv->image_x, nv->image_y) != 1);
}

TEST_CASE("recover_standard fixed") {
    MapOracle ident(2, 2, MapSpec(StandardMapSpec(1, Mat::identity(2))));
    auto [c1, b1] = recover_standard(ident);
    CHECK(c1 == 1);
    CHECK(b1 == Mat::identity(2));

    Mat r(2, 2, {q(1), q(1), q(0), q(1)});
    MapOracle neg(2, 2, MapSpec(StandardMapSpec(-1, r)));
    auto [c2, b2] = recover_standard(neg);
    CHECK(c2 == -1);
    CHECK(b2 == r);
}

TEST_CASE("recover_standard round trip") {
    for (uint64_t s = 0; s < 15; ++s) {
        int n = 2 + static_cast<int>(s % 3);
        int m = n + static_cast<int>(s % 2);
        StandardMapSpec st = gen_random_standard(n, m, 500 + s);
        MapOracle o(n, m, MapSpec(st));
        auto [c, block] = recover_standard(o);
        CHECK(c == st.c);
        StandardMapSpec rec(c, block);
        Rng rng(600 + s);
        for (int t = 0; t < 20; ++t) {
            SymMat a = rng.sym(n);
            CHECK(maps::apply(MapSpec(rec), a) == maps::apply(MapSpec(st), a));
        }
    }
}

TEST_CASE("recover_s2_affine") {
    // Pure translation.
    MapOracle shift(2, 2, MapSpec(StandardMapSpec(1, Mat::identity(2), SymMat::unit(2, 0, 0))));
    minkowski::AffineCongruence rec = recover_s2_affine(shift);
    CHECK(rec.c == 1);
    CHECK(rec.p == Mat::identity(2));
    CHECK(rec.s == SymMat::unit(2, 0, 0));

    // Forward-generated congruence with translation.
    Mat r(2, 2, {q(1), q(1), q(0), q(1)});
    minkowski::AffineCongruence g(-1, r, SymMat::unit(2, 1, 1));
    MapOracle fwd = MapOracle::tabulate(
        2, 2, [&g](const SymMat& a) { return minkowski::affine_apply(g, a); },
        canonical_probes(2, kDefaultProbeSeed));
    minkowski::AffineCongruence rec2 = recover_s2_affine(fwd);
    CHECK(rec2.c == -1);
    CHECK(rec2.p == r);
    CHECK(rec2.s == SymMat::unit(2, 1, 1));

    // Rank-deficient images are refused.
    DegenerateMapSpec dg(SymMat::unit(2, 0, 0), TraceFn{}, 2);
    CHECK_THROWS_AS(recover_s2_affine(MapOracle(2, 2, MapSpec(dg))), NoRank2Witness);
}

TEST_CASE("doubling map has no rational standard form") {
    // A -> 2A preserves adjacency but its standard factor needs sqrt(2);
    // recovery must refuse rather than approximate, and the classifier must
    // stay honest: no witness exists, so the verdict is undetermined.
    MapOracle doubling = MapOracle::tabulate(
        2, 2, [](const SymMat& a) { return q(2) * a; }, canonical_probes(2, kDefaultProbeSeed));
    CHECK_THROWS_AS(recover_standard(doubling), NonRationalColumn);
    try {
        recover_standard(doubling);
    } catch (const NonRationalColumn& e) {
        CHECK(e.obstruction == q(2));
    }
    ClassifyResult res = classify(doubling);
    CHECK(std::holds_alternative<Undetermined>(res));
}

TEST_CASE("inconsistent cross terms are refused") {
    std::vector<std::pair<SymMat, SymMat>> rows = {
        {SymMat::zero(2), SymMat::zero(2)},
        {SymMat::unit(2, 0, 0), SymMat::unit(2, 0, 0)},
        {SymMat::unit(2, 1, 1), SymMat::unit(2, 1, 1)},
        {SymMat::unit(2, 0, 1), SymMat::identity(2)},  // not +-(E12 + E21)
    };
    MapOracle o(2, 2, rows);
    CHECK_THROWS_AS(recover_standard(o), CrossTermMismatch);

    // Through the classifier, zeroing the off-diagonal entry instead gives a
    // concrete adjacency violation.
    MapOracle diag_only = MapOracle::tabulate(
        2, 2,
        [](const SymMat& a) {
            SymMat out(2);
            out.set(0, 0, a(0, 0));
            out.set(1, 1, a(1, 1));
            return out;
        },
        canonical_probes(2, kDefaultProbeSeed));
    ClassifyResult res = classify(diag_only);
    const auto* nv = std::get_if<NotAdjacencyPreserving>(&res);
    REQUIRE(nv != nullptr);
    CHECK(is_adjacent(nv->x, nv->y));
    CHECK(dist(nv->image_x, nv->image_y) != 1);
}

TEST_CASE("constant maps are flagged") {
    // After zero-normalization every probe lands on 0; the probe pair
    // (0, E11) is already a violation.
    MapOracle constant = MapOracle::tabulate(
        2, 2, [](const SymMat&) { return SymMat::unit(2, 0, 0); },
        canonical_probes(2, kDefaultProbeSeed));
    ClassifyResult res = classify(constant);
    CHECK(std::holds_alternative<NotAdjacencyPreserving>(res));
}

TEST_CASE("table functional") {
    TableFn table;
    table.entries.emplace_back(SymMat::unit(2, 0, 0), q(4));
    CHECK(eval_functional(FunctionalSpec(table), SymMat::unit(2, 0, 0)) == q(4));
    CHECK_THROWS_AS(eval_functional(FunctionalSpec(table), SymMat::zero(2)), MissingTableEntry);
}

TEST_CASE("complete_to_invertible") {
    for (uint64_t s = 0; s < 12; ++s) {
        int n = 2 + static_cast<int>(s % 2);
        int m = n + static_cast<int>(s % 3);
        Rng rng(700 + s);
        Mat block = rng.full_col_rank(m, n);
        Mat full = complete_to_invertible(block);
        CHECK_FALSE(det(full).is_zero());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) CHECK(full(i, j) == block(i, j));

        // Acting with the completed matrix on the embedded input reproduces
        // the block formula.
        SymMat a = rng.sym(n);
        CHECK(congruence(embed_h(a, m), full) == SymMat(block * a.mat() * block.transpose()));
    }
    Mat thin(3, 2, {Rat(1), Rat(0), Rat(2), Rat(0), Rat(3), Rat(0)});
    CHECK_THROWS_AS(complete_to_invertible(thin), PreconditionViolation);
}

TEST_CASE("oracle duplicate tabulation rejected") {
    std::vector<std::pair<SymMat, SymMat>> rows = {
        {SymMat::zero(2), SymMat::zero(2)},
        {SymMat::zero(2), SymMat::unit(2, 0, 0)},
    };
    CHECK_THROWS_AS(MapOracle(2, 2, rows), PreconditionViolation);
}
