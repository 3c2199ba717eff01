#include "symadj/selftest.hpp"

#include <chrono>
#include <functional>

#include "symadj/geometry.hpp"
#include "symadj/io.hpp"
#include "symadj/maps.hpp"
#include "symadj/minkowski.hpp"
#include "symadj/quadform.hpp"
#include "symadj/rng.hpp"

namespace symadj {
namespace selftest {

namespace {

using io::format;

uint64_t mix(uint64_t seed, uint64_t salt) {
    Rng r(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
    return r.next();
}

class Runner {
public:
    Runner(const char* name, uint64_t seed, int trials)
        : start_(std::chrono::steady_clock::now()) {
        report_.suite = name;
        report_.seed = seed;
        report_.trials = trials;
    }

    void check(bool ok, const std::string& what, const std::function<std::string()>& witness) {
        if (ok) return;
        if (report_.failures.size() < 16)  // keep reports bounded
            report_.failures.emplace_back(what, witness());
        else
            ++overflow_;
    }

    Report finish() {
        if (overflow_ > 0)
            report_.failures.emplace_back("additional failures suppressed", std::to_string(overflow_));
        report_.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return report_;
    }

private:
    Report report_;
    int overflow_ = 0;
    std::chrono::steady_clock::time_point start_;
};

int dim_cycle(int trial, int lo, int hi) { return lo + trial % (hi - lo + 1); }

Mat hstack(const Mat& a, const Mat& b) {
    Mat m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

// Rational Lorentz matrices come from congruences with |det P| = 1: products
// of shears, a diagonal t, 1/t scale, and an optional swap.
Mat random_unimodular_2x2(Rng& rng) {
    Mat p = Mat::identity(2);
    int steps = static_cast<int>(rng.range(2, 5));
    for (int s = 0; s < steps; ++s) {
        Mat e = Mat::identity(2);
        switch (rng.range(0, 3)) {
            case 0: e(0, 1) = rng.nonzero_rat(); break;
            case 1: e(1, 0) = rng.nonzero_rat(); break;
            case 2: {
                Rat t = rng.nonzero_rat();
                e(0, 0) = t;
                e(1, 1) = t.inverse();
                break;
            }
            default:
                e(0, 0) = Rat(0);
                e(1, 1) = Rat(0);
                e(0, 1) = Rat(1);
                e(1, 0) = Rat(1);
                break;
        }
        p = p * e;
    }
    return p;
}

minkowski::LorentzMat random_lorentz(Rng& rng) {
    minkowski::AffineCongruence g(rng.chance(1, 2) ? 1 : -1, random_unimodular_2x2(rng), SymMat(2));
    return minkowski::congruence_to_weyl(g).l;
}

// Row-major first-nonzero rule, as used for recovered Lorentz factors.
Mat sign_normalized(Mat p) {
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) {
            if (p(i, j).is_zero()) continue;
            if (p(i, j).sign() < 0) return Rat(-1) * p;
            return p;
        }
    return p;
}

// First-column rule, as used for recovered standard blocks.
Mat col_sign_normalized(Mat p) {
    for (int i = 0; i < p.rows(); ++i) {
        if (p(i, 0).is_zero()) continue;
        if (p(i, 0).sign() < 0) return Rat(-1) * p;
        break;
    }
    return p;
}

std::vector<SymMat> coordinate_span_vectors(Rng& rng, int n, const std::vector<int>& support);

}  // namespace

Report suite_metric_invariance(uint64_t seed, int trials) {
    Runner run("metric-invariance", seed, trials);
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, static_cast<uint64_t>(t)));
        int n = dim_cycle(t, 2, 6);
        SymMat a = rng.sym(n), b = rng.sym(n), s = rng.sym(n), c_mat = rng.sym(n);
        Mat r = rng.invertible(n);
        Rat c = rng.nonzero_rat();
        int d = dist(a, b);
        auto wit = [&] { return format(a) + format(b); };
        run.check(dist(a + s, b + s) == d, "translation invariance", wit);
        run.check(dist(congruence(a, r), congruence(b, r)) == d, "congruence invariance", wit);
        run.check(dist(c * a, c * b) == d, "scaling invariance", wit);
        // Metric axioms.
        run.check(dist(a, a) == 0, "d(A,A) = 0", wit);
        run.check((d == 0) == (a == b), "d(A,B) = 0 iff A = B", wit);
        run.check(dist(b, a) == d, "symmetry", wit);
        run.check(dist(a, c_mat) <= d + dist(b, c_mat), "triangle inequality", [&] {
            return format(a) + format(b) + format(c_mat);
        });
        run.check(rank(a + b) <= rank(a) + rank(b), "rank subadditivity", wit);
    }
    return run.finish();
}

Report suite_direct_sum(uint64_t seed, int trials) {
    Runner run("direct-sum", seed, trials);
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, 0x100 + static_cast<uint64_t>(t)));
        int n = dim_cycle(t, 2, 5);
        SymMat y(n), z(n);
        if (t % 2 == 0) {
            y = rng.sym(n);
            z = rng.sym(n);
        } else {
            // Complementary coordinate blocks pushed through one congruence:
            // the images stay independent, so the sum is direct.
            int a = static_cast<int>(rng.range(1, n - 1));
            int b = static_cast<int>(rng.range(1, n - a));
            SymMat ya(n), zb(n);
            SymMat small_a = rng.sym_of_rank(a, a);
            for (int i = 0; i < a; ++i)
                for (int j = i; j < a; ++j) ya.set(i, j, small_a(i, j));
            SymMat small_b = rng.sym_of_rank(b, b);
            for (int i = 0; i < b; ++i)
                for (int j = i; j < b; ++j) zb.set(a + i, a + j, small_b(i, j));
            Mat r = rng.invertible(n);
            y = congruence(ya, r);
            z = congruence(zb, r);
        }
        SymMat x = y + z;
        bool claimed = direct_sum_check(x, y, z);
        // Independent column-span counting: the joint span must have full
        // combined dimension and carry the whole image of the sum.
        int span_yz = rank(hstack(y.mat(), z.mat()));
        bool oracle = span_yz == rank(y) + rank(z) && rank(x) == span_yz;
        run.check(claimed == oracle, "rank additivity vs column-span count",
                  [&] { return format(y) + format(z); });
        if (claimed) {
            // Cross-check: joint image bases stay independent.
            std::vector<Vec> by = image_basis(y), bz = image_basis(z);
            const size_t total = by.size() + bz.size();
            if (total > 0) {
                Mat joint(n, static_cast<int>(total));
                int col = 0;
                for (const Vec& v : by) {
                    for (int i = 0; i < n; ++i) joint(i, col) = v[i];
                    ++col;
                }
                for (const Vec& v : bz) {
                    for (int i = 0; i < n; ++i) joint(i, col) = v[i];
                    ++col;
                }
                run.check(rank(joint) == static_cast<int>(total),
                          "joint image bases independent", [&] { return format(y) + format(z); });
            }
        }
    }
    return run.finish();
}

Report suite_line_dichotomy(uint64_t seed, int trials) {
    Runner run("line-dichotomy", seed, trials);
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, 0x200 + static_cast<uint64_t>(t)));
        int n = dim_cycle(t, 2, 5);
        SymMat g = rng.sym(n);
        SymMat base = rng.sym(n);
        RankOneTerm dir = rng.rank_one_term(n);
        geometry::Line l = geometry::line(base, base + sym_outer(dir, n));
        geometry::LineProfile p = geometry::line_distance_profile(g, l);

        std::vector<Rat> samples = {Rat(-3), Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2), Rat(3)};
        auto predicted = [&p](const Rat& lambda) {
            if (const auto* c = std::get_if<geometry::ConstantProfile>(&p)) return c->k;
            const auto& e = std::get<geometry::ExceptionalProfile>(p);
            return lambda == e.lambda0 ? e.k_at_k : e.k_at_k + 1;
        };
        if (const auto* e = std::get_if<geometry::ExceptionalProfile>(&p)) samples.push_back(e->lambda0);
        for (const Rat& lambda : samples) {
            int actual = dist(g, geometry::line_point(l, lambda));
            run.check(actual == predicted(lambda), "profile matches brute force",
                      [&] { return "lambda=" + format(lambda) + "\n" + format(g) + format(base); });
        }
        if (const auto* e = std::get_if<geometry::ExceptionalProfile>(&p)) {
            run.check(dist(g, e->k_point) == e->k_at_k, "exceptional point value",
                      [&] { return format(g) + format(e->k_point); });
        }

        // Common neighbours of two multiples of a rank-one matrix are again
        // multiples: every sampled adjacent-to-both candidate sits on the line.
        SymMat r1 = sym_outer(rng.rank_one_term(n));
        Rat lam = Rat(static_cast<long>(rng.range(2, 5)));
        geometry::Line scale_line = geometry::line(r1, lam * r1);
        Rat mu = rng.nonzero_rat();
        if (mu != Rat(1) && mu != lam) {
            SymMat x = mu * r1;
            run.check(geometry::on_line(scale_line, x).has_value(),
                      "multiple of rank-one on its scale line", [&] { return format(x); });
        }
        SymMat cand = r1 + sym_outer(rng.rank_one_term(n));
        if (is_adjacent(cand, lam * r1)) {
            run.check(geometry::on_line(scale_line, cand).has_value(),
                      "common neighbour lies on the scale line", [&] { return format(cand); });
        }

        // A rank-one pencil that stays rank one on {1,2,3,4} forces the
        // second matrix to vanish.
        SymMat a_one = sym_outer(rng.rank_one_term(n));
        SymMat b_any = rng.sym(n);
        bool all_one = true;
        for (long lv = 1; lv <= 4; ++lv)
            if (rank(a_one + Rat(lv) * b_any) != 1) { all_one = false; break; }
        run.check(all_one == b_any.is_zero(), "rank-one pencil forces zero",
                  [&] { return format(a_one) + format(b_any); });
    }
    return run.finish();
}

Report suite_chains(uint64_t seed, int trials) {
    Runner run("chains", seed, trials);
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, 0x300 + static_cast<uint64_t>(t)));
        int n = dim_cycle(t, 2, 5);
        SymMat a = rng.sym(n), b = rng.sym(n);
        geometry::Chain c = geometry::adjacency_chain(a, b);
        auto wit = [&] { return format(a) + format(b); };
        run.check(static_cast<int>(c.points.size()) == dist(a, b) + 1, "chain length is dist + 1", wit);
        run.check(c.points.front() == a && c.points.back() == b, "chain endpoints", wit);
        for (size_t i = 0; i < c.points.size(); ++i)
            for (size_t j = i + 1; j < c.points.size(); ++j)
                run.check(dist(c.points[i], c.points[j]) == static_cast<int>(j - i),
                          "pairwise chain distances", wit);

        // Invertible chains in dims 2-4, verified end to end.
        int ni = dim_cycle(t, 2, 4);
        SymMat ia = rng.sym_of_rank(ni, ni);
        SymMat ib = rng.sym_of_rank(ni, ni);
        if (ia == ib) continue;
        try {
            geometry::CrossedChain cc =
                geometry::invertible_chain(ia, ib, mix(seed, 0x350 + static_cast<uint64_t>(t)));
            run.check(cc.chain.points.front() == ia && cc.chain.points.back() == ib,
                      "invertible chain endpoints", [&] { return format(ia) + format(ib); });
            // invertible_chain verifies its own postconditions; re-check the
            // crossing ranks here independently.
            for (const auto& [idx, cr] : cc.crossings)
                run.check(rank(cr) == ni - 1, "crossing rank", [&] { return format(cr); });
        } catch (const geometry::ChainConstructionFailure& e) {
            run.check(false, "invertible chain construction", [&] { return e.what(); });
        }
    }
    return run.finish();
}

namespace {

std::vector<SymMat> coordinate_span_vectors(Rng& rng, int n, const std::vector<int>& support) {
    // Independent vectors inside the coordinate subspace, orthogonalized
    // without normalization; rational throughout.
    const int k = static_cast<int>(support.size());
    std::vector<Vec> raw;
    int guard = 0;
    while (static_cast<int>(raw.size()) < k) {
        if (++guard > 200) throw std::logic_error("coordinate_span_vectors: sampling stuck");
        Vec v(n);
        for (int idx : support) v[idx] = rng.rat();
        if (v.is_zero()) continue;
        // Orthogonalize against what we have.
        for (const Vec& u : raw) {
            Rat f = dot(v, u) / dot(u, u);
            v = v - f * u;
        }
        if (!v.is_zero()) raw.push_back(v);
    }
    std::vector<SymMat> projections;
    for (const Vec& u : raw)
        projections.push_back(sym_outer(RankOneTerm(dot(u, u).inverse(), u), n));
    return projections;
}

}  // namespace

Report suite_quadform(uint64_t seed, int trials) {
    Runner run("quadform", seed, trials);
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, 0x400 + static_cast<uint64_t>(t)));
        int n = dim_cycle(t, 2, 5);
        SymMat a = rng.sym(n);
        auto wit = [&] { return format(a); };

        quadform::CongruenceDiag cd = quadform::diagonalize(a);
        run.check(!det(cd.s).is_zero(), "diagonalizer invertible", wit);
        SymMat diag_of = congruence(a, cd.s);
        bool is_diag = true;
        for (int i = 0; i < n && is_diag; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !diag_of(i, j).is_zero()) { is_diag = false; break; }
        run.check(is_diag, "S A S^T diagonal", wit);
        run.check(diag_of == SymMat::diag(cd.d), "diagonal entries recorded", wit);
        int nonzero = 0;
        for (const Rat& v : cd.d)
            if (!v.is_zero()) ++nonzero;
        run.check(nonzero == rank(a), "nonzero pivots count the rank", wit);

        quadform::Inertia in_a = quadform::inertia(a);
        run.check(in_a.pos + in_a.neg + in_a.zero == n, "inertia sums to dim", wit);
        Mat r = rng.invertible(n);
        run.check(quadform::inertia(congruence(a, r)) == in_a, "inertia congruence-invariant", wit);

        quadform::Decomposition dec = quadform::rank_one_decompose(a);
        run.check(static_cast<int>(dec.terms.size()) == rank(a), "term count is rank", wit);
        run.check(quadform::reassemble(dec, n) == a, "decomposition reassembles", wit);
        SymMat partial(n);
        for (size_t j = 0; j < dec.terms.size(); ++j) {
            partial = partial + sym_outer(dec.terms[j], n);
            run.check(rank(partial) == static_cast<int>(j + 1), "partial sums climb one rank", wit);
        }
        if (!dec.terms.empty()) {
            Mat stacked(n, static_cast<int>(dec.terms.size()));
            for (size_t j = 0; j < dec.terms.size(); ++j)
                for (int i = 0; i < n; ++i) stacked(i, static_cast<int>(j)) = dec.terms[j].vector[i];
            run.check(rank(stacked) == static_cast<int>(dec.terms.size()),
                      "decomposition vectors independent", wit);
        }

        // Idempotent splittings of a coordinate projection: both halves are
        // idempotent and annihilate each other.
        int k = static_cast<int>(rng.range(1, n));
        std::vector<int> support;
        for (int i = 0; i < n && static_cast<int>(support.size()) < k; ++i)
            if (rng.chance(1, 2) || n - i == k - static_cast<int>(support.size())) support.push_back(i);
        SymMat proj(n);
        for (int idx : support) proj.set(idx, idx, Rat(1));
        std::vector<SymMat> parts = coordinate_span_vectors(rng, n, support);
        SymMat part_a(n), part_b(n);
        bool any_a = false, any_b = false;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i % 2 == 0) { part_a = part_a + parts[i]; any_a = true; }
            else { part_b = part_b + parts[i]; any_b = true; }
        }
        run.check(part_a + part_b == proj, "orthogonal split reassembles the projection",
                  [&] { return format(proj); });
        if (any_a && any_b) {
            run.check(rank(proj) == rank(part_a) + rank(part_b), "split is rank additive",
                      [&] { return format(part_a) + format(part_b); });
            run.check(part_a.mat() * part_a.mat() == part_a.mat(), "first summand idempotent",
                      [&] { return format(part_a); });
            run.check(part_b.mat() * part_b.mat() == part_b.mat(), "second summand idempotent",
                      [&] { return format(part_b); });
            run.check((part_a.mat() * part_b.mat()).is_zero() && (part_b.mat() * part_a.mat()).is_zero(),
                      "summands annihilate", [&] { return format(part_a) + format(part_b); });
        }

        // Corner compression respects distance and corner products.
        int corner = static_cast<int>(rng.range(1, n));
        SymMat ca = embed_h(rng.sym(corner), n);
        SymMat cb = embed_h(rng.sym(corner), n);
        run.check(dist(quadform::compress_q(ca, corner), quadform::compress_q(cb, corner)) == dist(ca, cb),
                  "compression preserves distance", [&] { return format(ca) + format(cb); });
        Mat prod = ca.mat() * cb.mat() * ca.mat();
        run.check(quadform::compress_q(prod, corner) ==
                      quadform::compress_q(ca, corner).mat() * quadform::compress_q(cb, corner).mat() *
                          quadform::compress_q(ca, corner).mat(),
                  "compression multiplicative on sandwiches", [&] { return format(ca) + format(cb); });
        Mat sq = ca.mat() * ca.mat();
        run.check(quadform::compress_q(sq, corner) ==
                      quadform::compress_q(ca, corner).mat() * quadform::compress_q(ca, corner).mat(),
                  "compression preserves squares", [&] { return format(ca); });

        run.check(extract_block(embed_h(quadform::compress_q(ca, corner), n), corner) ==
                      quadform::compress_q(ca, corner),
                  "embed then extract is the identity", [&] { return format(ca); });
        run.check(rank(ca) == rank(quadform::compress_q(ca, corner)), "padding adds no rank",
                  [&] { return format(ca); });
    }
    return run.finish();
}

Report suite_minkowski_bridge(uint64_t seed, int trials) {
    Runner run("minkowski-bridge", seed, trials);
    using namespace minkowski;
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, 0x500 + static_cast<uint64_t>(t)));
        Vec x = rng.vec(3), y = rng.vec(3);
        if (t % 3 == 1) {
            // Null-separated pair: x - y on the light cone via the
            // square-sum parametrization.
            long mm = rng.range(1, 5), pp = rng.range(1, 5);
            Vec null_dir{Rat(mm * mm - pp * pp), Rat(2 * mm * pp), Rat(mm * mm + pp * pp)};
            y = x - null_dir;
        } else if (t % 10 == 5) {
            y = x;
        }
        auto wit = [&] { return format(x) + format(y); };
        run.check(det(t_map(x) - t_map(y)) == q_form(x - y), "determinant identity", wit);
        SeparationCheck sc = null_separation_adjacency_check(x, y);
        run.check(sc.consistent, "null separation matches adjacency", wit);
        run.check(t_inv(t_map(x)) == x, "t_inv o t_map is the identity", wit);

        // Swap conjugation: reflecting the first axis acts as the
        // antidiagonal congruence.
        Mat k(3, 3);
        k(0, 0) = Rat(-1);
        k(1, 1) = Rat(1);
        k(2, 2) = Rat(1);
        SymMat swap(2);
        swap.set(0, 1, Rat(1));
        run.check(t_map(k * x) == congruence(t_map(x), swap.mat()), "swap conjugation identity", wit);

        // Weyl maps scale the form by alpha^2 and preserve null separation.
        WeylMap f(rng.nonzero_rat(), random_lorentz(rng), rng.vec(3));
        Vec fx = weyl_apply(f, x), fy = weyl_apply(f, y);
        run.check(q_form(fx - fy) == f.alpha * f.alpha * q_form(x - y), "Weyl maps scale the form", wit);
        run.check(q_form(x - y).is_zero() == q_form(fx - fy).is_zero(), "Weyl maps preserve null pairs", wit);
        WeylMap round = weyl_compose(weyl_inverse(f), f);
        run.check(weyl_apply(round, x) == x, "inverse composes to the identity", wit);
    }
    return run.finish();
}

Report suite_lorentz_roundtrip(uint64_t seed, int trials) {
    Runner run("lorentz-roundtrip", seed, trials);
    using namespace minkowski;
    Mat j = MinkForm(3).j();
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, 0x600 + static_cast<uint64_t>(t)));
        Mat p = random_unimodular_2x2(rng);
        int c = rng.chance(1, 2) ? 1 : -1;
        AffineCongruence g(c, p, SymMat(2));
        WeylMap w = congruence_to_weyl(g);
        auto wit = [&] { return format(p); };
        run.check(w.alpha == Rat(1), "alpha is |det P|", wit);
        run.check(w.l.mat().transpose() * j * w.l.mat() == j, "produced matrix is Lorentz", wit);
        auto [c1, p1] = lorentz_to_congruence(w.l);
        run.check(c1 == c, "sign recovered", wit);
        run.check(p1 == sign_normalized(p), "congruence recovered up to global sign", wit);
    }
    return run.finish();
}

namespace {

std::vector<std::pair<SymMat, SymMat>> random_adjacent_pairs(Rng& rng, int n, int count) {
    std::vector<std::pair<SymMat, SymMat>> pairs;
    pairs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        SymMat x = rng.sym(n);
        pairs.emplace_back(x, x + sym_outer(rng.rank_one_term(n)));
    }
    return pairs;
}

}  // namespace

Report suite_map_dichotomy(uint64_t seed, int trials) {
    Runner run("map-dichotomy", seed, trials);
    using namespace maps;
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, 0x700 + static_cast<uint64_t>(t)));
        int n = 2 + t % 3;
        int m = n + t % 3;
        uint64_t gen_seed = mix(seed, 0x710 + static_cast<uint64_t>(t));

        StandardMapSpec st = gen_random_standard(n, m, gen_seed);
        MapOracle st_oracle(n, m, MapSpec(st));
        auto pairs = random_adjacent_pairs(rng, n, 50);
        CheckReport adj = check_adjacency_preserving(st_oracle, pairs);
        run.check(adj.ok() && adj.pairs_checked == 50, "standard map preserves adjacency",
                  [&] { return format(MapSpec(st)); });
        std::vector<std::pair<SymMat, SymMat>> mixed = pairs;
        for (int i = 0; i < 10; ++i) mixed.emplace_back(rng.sym(n), rng.sym(n));
        run.check(check_nonexpansive(st_oracle, mixed).ok(), "standard map nonexpansive",
                  [&] { return format(MapSpec(st)); });

        ClassifyResult verdict = classify(st_oracle);
        const auto* sv = std::get_if<StandardVerdict>(&verdict);
        run.check(sv != nullptr, "standard map classified standard",
                  [&] { return format(MapSpec(st)); });
        if (sv != nullptr) {
            run.check(sv->c == st.c && sv->r_block == col_sign_normalized(st.r_block),
                      "standard parameters recovered exactly", [&] { return format(MapSpec(st)); });
        }

        // Line images: line points land on the image line, injectively.
        SymMat la = rng.sym(n);
        SymMat lb = la + sym_outer(rng.rank_one_term(n));
        SymMat fla = maps::apply(MapSpec(st), la), flb = maps::apply(MapSpec(st), lb);
        geometry::Line image_line = geometry::line(fla, flb);
        geometry::Line input_line = geometry::line(la, lb);
        std::vector<Rat> lambdas = {Rat(-2), Rat(-1), Rat(2), Rat(3)};
        std::vector<Rat> image_params;
        for (const Rat& lv : lambdas) {
            SymMat img = maps::apply(MapSpec(st), geometry::line_point(input_line, lv));
            std::optional<Rat> pos = geometry::on_line(image_line, img);
            run.check(pos.has_value(), "line image stays on the image line",
                      [&] { return format(MapSpec(st)) + format(la); });
            if (pos) image_params.push_back(*pos);
        }
        for (size_t i = 0; i < image_params.size(); ++i)
            for (size_t j = i + 1; j < image_params.size(); ++j)
                run.check(image_params[i] != image_params[j], "line restriction injective",
                          [&] { return format(MapSpec(st)); });

        if (m == n) {
            SymMat u = rng.sym(n), v = rng.sym(n);
            run.check(dist(maps::apply(MapSpec(st), u), maps::apply(MapSpec(st), v)) == dist(u, v),
                      "equal dims: distances preserved", [&] { return format(u) + format(v); });
        }
        if (m > n) {
            // Block-supported maps keep every image in the corner.
            Mat padded(m, n);
            Mat top = rng.invertible(n);
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj) padded(i, jj) = top(i, jj);
            StandardMapSpec block_map(st.c, padded);
            SymMat img = maps::apply(MapSpec(block_map), rng.sym(n));
            bool supported = true;
            try {
                SymMat core = extract_block(img, n);
                supported = embed_h(core, m) == img;
            } catch (const PreconditionViolation&) {
                supported = false;
            }
            run.check(supported, "padded block keeps images in the corner",
                      [&] { return format(img); });
        }

        DegenerateMapSpec dg = gen_random_degenerate(n, m, gen_seed ^ 0xdeULL);
        MapOracle dg_oracle(n, m, MapSpec(dg));
        CheckReport dadj = check_adjacency_preserving(dg_oracle, pairs);
        run.check(dadj.ok(), "degenerate map preserves adjacency",
                  [&] { return format(MapSpec(dg)); });
        run.check(check_nonexpansive(dg_oracle, mixed).ok(), "degenerate map nonexpansive",
                  [&] { return format(MapSpec(dg)); });
        ClassifyResult dverdict = classify(dg_oracle);
        const auto* dv = std::get_if<DegenerateVerdict>(&dverdict);
        run.check(dv != nullptr, "degenerate map classified degenerate",
                  [&] { return format(MapSpec(dg)); });
        if (dv != nullptr) {
            run.check(dv->b == dg.b, "degenerate direction recovered",
                      [&] { return format(dv->b) + format(dg.b); });
            bool samples_match = true;
            for (const auto& [probe, coeff] : dv->samples)
                if (coeff != eval_functional(dg.f, probe)) { samples_match = false; break; }
            run.check(samples_match, "observed functional samples match",
                      [&] { return format(MapSpec(dg)); });
        }
    }
    return run.finish();
}

Report suite_affine_recovery(uint64_t seed, int trials) {
    Runner run("affine-recovery", seed, trials);
    using namespace maps;
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(seed, 0x800 + static_cast<uint64_t>(t)));
        minkowski::AffineCongruence g(rng.chance(1, 2) ? 1 : -1, rng.invertible(2), rng.sym(2));
        MapOracle oracle = MapOracle::tabulate(
            2, 2, [&g](const SymMat& a) { return minkowski::affine_apply(g, a); },
            canonical_probes(2, kDefaultProbeSeed));
        try {
            minkowski::AffineCongruence rec = recover_s2_affine(oracle);
            auto wit = [&] { return format(g.p) + format(g.s); };
            run.check(rec.c == g.c, "affine sign recovered", wit);
            run.check(rec.p == col_sign_normalized(g.p), "affine congruence recovered up to sign", wit);
            run.check(rec.s == g.s, "translation recovered", wit);
        } catch (const std::exception& e) {
            run.check(false, "affine recovery", [&] { return e.what(); });
        }
    }
    // Rank-deficient images must be refused.
    DegenerateMapSpec flat = gen_random_degenerate(2, 2, mix(seed, 0x8f0));
    MapOracle flat_oracle(2, 2, MapSpec(flat));
    bool refused = false;
    try {
        (void)recover_s2_affine(flat_oracle);
    } catch (const NoRank2Witness&) {
        refused = true;
    }
    run.check(refused, "degenerate oracle refused without a rank-2 witness",
              [&] { return format(MapSpec(flat)); });
    return run.finish();
}

Report suite_negative_controls(uint64_t seed, int trials) {
    Runner run("negative-controls", seed, trials > 0 ? trials : 1);
    using namespace maps;
    std::vector<SymMat> probes = canonical_probes(2, kDefaultProbeSeed);

    MapOracle square = MapOracle::tabulate(
        2, 2, [](const SymMat& a) { return SymMat(a.mat() * a.mat()); }, probes);
    ClassifyResult sq_verdict = classify(square);
    const auto* sqv = std::get_if<NotAdjacencyPreserving>(&sq_verdict);
    run.check(sqv != nullptr, "squaring map flagged", [] { return std::string("no witness"); });
    if (sqv != nullptr) {
        run.check(is_adjacent(sqv->x, sqv->y) && dist(sqv->image_x, sqv->image_y) != 1,
                  "squaring witness is a genuine violation",
                  [&] { return format(sqv->x) + format(sqv->y); });
    }

    MapOracle truncate = MapOracle::tabulate(
        2, 2,
        [](const SymMat& a) {
            SymMat out(2);
            out.set(0, 0, a(0, 0));
            return out;
        },
        probes);
    ClassifyResult tr_verdict = classify(truncate);
    const auto* trv = std::get_if<NotAdjacencyPreserving>(&tr_verdict);
    run.check(trv != nullptr, "entry truncation flagged", [] { return std::string("no witness"); });
    if (trv != nullptr) {
        run.check(is_adjacent(trv->x, trv->y) && dist(trv->image_x, trv->image_y) != 1,
                  "truncation witness is a genuine violation",
                  [&] { return format(trv->x) + format(trv->y); });
    }

    // The checker itself must report the truncation pair (E22, 0).
    std::vector<std::pair<SymMat, SymMat>> pair = {{SymMat::unit(2, 1, 1), SymMat::zero(2)}};
    MapOracle truncate2 = MapOracle::tabulate(
        2, 2,
        [](const SymMat& a) {
            SymMat out(2);
            out.set(0, 0, a(0, 0));
            return out;
        },
        std::vector<SymMat>{SymMat::unit(2, 1, 1), SymMat::zero(2)});
    CheckReport rep = check_adjacency_preserving(truncate2, pair);
    run.check(rep.violations == 1 && rep.witness.has_value(), "checker reports the collapsed pair",
              [] { return std::string("expected one violation"); });
    return run.finish();
}

const std::vector<SuiteEntry>& all_suites() {
    static const std::vector<SuiteEntry> suites = {
        {"metric-invariance", suite_metric_invariance},
        {"direct-sum", suite_direct_sum},
        {"line-dichotomy", suite_line_dichotomy},
        {"chains", suite_chains},
        {"quadform", suite_quadform},
        {"minkowski-bridge", suite_minkowski_bridge},
        {"lorentz-roundtrip", suite_lorentz_roundtrip},
        {"map-dichotomy", suite_map_dichotomy},
        {"affine-recovery", suite_affine_recovery},
        {"negative-controls", suite_negative_controls},
    };
    return suites;
}

Report run_suite(const std::string& name, uint64_t seed, int trials) {
    for (const SuiteEntry& entry : all_suites())
        if (name == entry.name) return entry.fn(seed, trials);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace selftest
}  // namespace symadj
