#include "symadj/geometry.hpp"

namespace symadj {
namespace geometry {

Line line(const SymMat& a, const SymMat& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("line: dimension mismatch");
    if (!is_adjacent(a, b)) throw PreconditionViolation("line: points are not adjacent");
    return Line{a, quadform::rank_one_extract(b - a)};
}

SymMat line_point(const Line& l, const Rat& lambda) {
    if (lambda.is_zero()) return l.base;
    return l.base + sym_outer(RankOneTerm(lambda * l.direction.coeff, l.direction.vector));
}

std::optional<Rat> on_line(const Line& l, const SymMat& x) {
    if (x.dim() != l.base.dim()) throw DimensionMismatch("on_line: dimension mismatch");
    SymMat diff = x - l.base;
    if (diff.is_zero()) return Rat(0);
    // diff must be mu * vv^T for the direction's v; then lambda = mu / coeff.
    const Vec& v = l.direction.vector;
    int j = -1;
    for (int i = 0; i < v.dim() && j < 0; ++i)
        if (!v[i].is_zero()) j = i;
    Rat mu = diff(j, j) / (v[j] * v[j]);
    if (mu.is_zero()) return std::nullopt;
    Rat lambda = mu / l.direction.coeff;
    if (line_point(l, lambda) == x) return lambda;
    return std::nullopt;
}

namespace {

int rank_at(const SymMat& g, const Line& l, const Rat& lambda) {
    return dist(g, line_point(l, lambda));
}

// Exceptional profiles are checked at the special point and two others;
// constant profiles at four sample points.
void verify_profile(const SymMat& g, const Line& l, const LineProfile& p) {
    if (const auto* c = std::get_if<ConstantProfile>(&p)) {
        for (long s : {0L, 1L, -1L, 2L})
            if (rank_at(g, l, Rat(s)) != c->k)
                throw std::logic_error("line_distance_profile: constant branch failed verification");
        return;
    }
    const auto& e = std::get<ExceptionalProfile>(p);
    if (dist(g, e.k_point) != e.k_at_k)
        throw std::logic_error("line_distance_profile: exceptional point failed verification");
    for (long off : {1L, -1L})
        if (rank_at(g, l, e.lambda0 + Rat(off)) != e.k_at_k + 1)
            throw std::logic_error("line_distance_profile: off-point value failed verification");
}

}  // namespace

LineProfile line_distance_profile(const SymMat& g, const Line& l) {
    if (g.dim() != l.base.dim()) throw DimensionMismatch("line_distance_profile: dimension mismatch");
    // d(g, base + lambda*delta*vv^T) = rank(m0 - lambda*delta*vv^T), m0 = g - base.
    SymMat m0 = g - l.base;
    const Vec& v = l.direction.vector;
    const Rat& delta = l.direction.coeff;
    const int r0 = rank(m0);

    LineProfile result = ConstantProfile{r0};
    std::optional<Vec> w = solve(m0, v);
    if (!w) {
        // v outside Im m0: rank jumps by one away from lambda = 0.
        result = ExceptionalProfile{Rat(0), l.base, r0};
    } else {
        Rat vw = dot(v, *w);
        if (!vw.is_zero()) {
            // Rank-one update: the affine factor 1 - lambda*delta*v^T w
            // vanishes at exactly one lambda, where the rank drops by one.
            Rat lambda0 = (delta * vw).inverse();
            result = ExceptionalProfile{lambda0, line_point(l, lambda0), r0 - 1};
        }
    }
    verify_profile(g, l, result);
    return result;
}

Chain adjacency_chain(const SymMat& a, const SymMat& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("adjacency_chain: dimension mismatch");
    Chain c;
    c.points.push_back(a);
    SymMat x = a;
    for (const RankOneTerm& t : quadform::rank_one_decompose(b - a).terms) {
        x = x + sym_outer(t, a.dim());
        c.points.push_back(x);
    }
    return c;
}

namespace {

// Root of det(x + lambda*c*vv^T) = det(x)*(1 + lambda*c*v^T x^{-1} v), when
// the affine factor is nonconstant. x must be invertible.
std::optional<Rat> singular_lambda(const SymMat& x, const RankOneTerm& step) {
    Mat xi = inverse(x.mat());
    Rat q = dot(step.vector, xi * step.vector) * step.coeff;
    if (q.is_zero()) return std::nullopt;
    return -q.inverse();
}

}  // namespace

CrossedChain invertible_chain(const SymMat& a, const SymMat& b, uint64_t seed) {
    const int n = a.dim();
    if (b.dim() != n) throw DimensionMismatch("invertible_chain: dimension mismatch");
    if (rank(a) != n || rank(b) != n)
        throw PreconditionViolation("invertible_chain: endpoints must be invertible");
    if (a == b) throw PreconditionViolation("invertible_chain: endpoints must differ");

    Rng rng(seed ^ 0x1c5a17ed1ULL);

    // A step is viable when the target stays invertible and the segment's
    // affine determinant has a root (a crossing exists on the segment line).
    auto viable = [&](const SymMat& x, const RankOneTerm& t) {
        return rank(x + sym_outer(t, n)) == n && singular_lambda(x, t).has_value();
    };
    // Every term of every rank-one decomposition of b - x advances the walk
    // by one; congruence conjugation supplies alternative decompositions.
    auto candidate_steps = [&](const SymMat& x) {
        std::vector<RankOneTerm> steps = quadform::rank_one_decompose(b - x).terms;
        for (int tries = 0; tries < 4; ++tries) {
            Mat r = rng.invertible(n);
            Mat r_inv = inverse(r);
            for (const RankOneTerm& t : quadform::rank_one_decompose(congruence(b - x, r)).terms)
                steps.emplace_back(t.coeff, r_inv * t.vector);
        }
        return steps;
    };
    // Depth-first search for a fully viable completion; backtracks out of
    // dead ends (e.g. a forced last segment with a constant determinant).
    auto complete = [&](auto&& self, const SymMat& x, int& nodes) -> std::optional<std::vector<RankOneTerm>> {
        if (x == b) return std::vector<RankOneTerm>{};
        if (--nodes < 0) return std::nullopt;
        for (const RankOneTerm& t : candidate_steps(x)) {
            if (!viable(x, t)) continue;
            if (auto tail = self(self, x + sym_outer(t, n), nodes)) {
                tail->insert(tail->begin(), t);
                return tail;
            }
        }
        return std::nullopt;
    };

    SymMat start = a;
    std::vector<RankOneTerm> prefix;  // committed detour steps out of dead ends
    std::optional<std::vector<RankOneTerm>> walk;
    for (int attempt = 0; attempt < 24 && !walk; ++attempt) {
        int nodes = 800;
        walk = complete(complete, start, nodes);
        if (walk) break;
        // Detour off the dead end with a viable random step, then retry.
        for (int tries = 0; tries < 64; ++tries) {
            RankOneTerm t = rng.rank_one_term(n);
            if (start + sym_outer(t, n) == b) continue;
            if (!viable(start, t)) continue;
            prefix.push_back(t);
            start = start + sym_outer(t, n);
            break;
        }
    }
    if (!walk) throw ChainConstructionFailure("invertible_chain: retry budget exhausted");

    Chain chain;
    chain.points.push_back(a);
    std::vector<std::pair<int, SymMat>> crossings;
    SymMat x = a;
    prefix.insert(prefix.end(), walk->begin(), walk->end());
    for (const RankOneTerm& t : prefix) {
        std::optional<Rat> ls = singular_lambda(x, t);
        SymMat crossing = x + sym_outer(RankOneTerm(*ls * t.coeff, t.vector), n);
        crossings.emplace_back(static_cast<int>(chain.points.size()) - 1, crossing);
        x = x + sym_outer(t, n);
        chain.points.push_back(x);
    }

    // Full verification; an unverified chain is never returned.
    for (const SymMat& p : chain.points)
        if (rank(p) != n) throw ChainConstructionFailure("invertible_chain: point not invertible");
    for (size_t i = 0; i + 1 < chain.points.size(); ++i)
        if (!is_adjacent(chain.points[i], chain.points[i + 1]))
            throw ChainConstructionFailure("invertible_chain: consecutive points not adjacent");
    if (crossings.size() != chain.points.size() - 1)
        throw ChainConstructionFailure("invertible_chain: missing crossing");
    for (const auto& [idx, c] : crossings) {
        if (rank(c) != n - 1) throw ChainConstructionFailure("invertible_chain: crossing rank wrong");
        Line seg = line(chain.points[static_cast<size_t>(idx)], chain.points[static_cast<size_t>(idx) + 1]);
        if (!on_line(seg, c)) throw ChainConstructionFailure("invertible_chain: crossing off the segment line");
    }
    return CrossedChain{std::move(chain), std::move(crossings)};
}

}  // namespace geometry
}  // namespace symadj
